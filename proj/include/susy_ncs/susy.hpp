// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file susy.hpp
 * @brief Supersymmetric oscillator Hamiltonian, the K-matrix of the
 *        supersymmetric annihilation operator (SAO), and its block matrix.
 *
 * Block operators act on SpinorState::stacked() vectors (upper block first).
 * The lower block of the Hamiltonian is omega a a^dagger = omega (N + 1),
 * which is stored exactly rather than as a product of truncated ladders.
 */

#pragma once

#include <susy_ncs/errors.hpp>
#include <susy_ncs/fock.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>

namespace susy {

inline constexpr double kDefaultClassifyTolerance = 1e-10;

enum class KFamily { Generic, Degenerate, Singular };

inline std::string_view to_string(KFamily f) {
  switch (f) {
    case KFamily::Generic: return "generic";
    case KFamily::Degenerate: return "degenerate";
    case KFamily::Singular: return "singular";
  }
  return "?";
}

struct KMatrix {
  Complex k1, k2, k3, k4;
  Complex kappa_plus, kappa_minus;
  KFamily family = KFamily::Generic;

  Complex trace() const { return k1 + k4; }
  Complex determinant() const { return k1 * k4 - k2 * k3; }
  Complex discriminant() const { return (k1 - k4) * (k1 - k4) + 4.0 * k2 * k3; }
};

/**
 * Eigenvalues kappa_pm = (k1 + k4)/2 +- sqrt((k1 - k4)^2/4 + k2 k3) with the
 * principal square root, and the family tag. Degenerate is tested first:
 * |disc| < tol (|k1| + |k4|)^2 with kappa != 0; then Singular:
 * |kappa+ kappa-| < tol max(1, |kappa+|^2, |kappa-|^2).
 */
inline KMatrix classify(Complex k1, Complex k2, Complex k3, Complex k4,
                        double tolerance = kDefaultClassifyTolerance) {
  for (Complex k : {k1, k2, k3, k4}) {
    if (!std::isfinite(k.real()) || !std::isfinite(k.imag())) {
      throw DomainError("classify: non-finite K entry");
    }
  }
  KMatrix K{k1, k2, k3, k4, {}, {}, KFamily::Generic};
  const Complex half_trace = (k1 + k4) / 2.0;
  const Complex root = std::sqrt((k1 - k4) * (k1 - k4) / 4.0 + k2 * k3);
  K.kappa_plus = half_trace + root;
  K.kappa_minus = half_trace - root;

  const double scale = std::abs(k1) + std::abs(k4);
  const bool zero_disc = std::abs(K.discriminant()) < tolerance * scale * scale;
  const double kp2 = std::norm(K.kappa_plus);
  const double km2 = std::norm(K.kappa_minus);
  const bool zero_det =
      std::abs(K.kappa_plus * K.kappa_minus) < tolerance * std::max({1.0, kp2, km2});

  if (zero_disc && std::abs(half_trace) > 0.0 && !zero_det) {
    K.family = KFamily::Degenerate;
    K.kappa_plus = K.kappa_minus = half_trace;
  } else if (zero_det) {
    K.family = KFamily::Singular;
  }
  return K;
}

/// K of the one-parameter family (1, cos theta, sin theta, 1); for
/// 0 < theta < pi/2 the eigenvalues 1 +- sqrt(sin(2 theta)/2) are real.
inline KMatrix theta_family(double theta, double tolerance = kDefaultClassifyTolerance) {
  return classify(1.0, std::cos(theta), std::sin(theta), 1.0, tolerance);
}

/// H = omega diag(N, N + 1) on the 2 dim spinor space.
inline OperatorMatrix susy_hamiltonian(double omega, int dim) {
  if (!(omega > 0.0)) throw DomainError("susy_hamiltonian: omega must be positive");
  require_dim(dim);
  OperatorMatrix h = OperatorMatrix::Zero(2 * dim, 2 * dim);
  for (int n = 0; n < dim; ++n) {
    h(n, n) = omega * n;
    h(dim + n, dim + n) = omega * (n + 1.0);
  }
  return h;
}

/// [[k1 a~, k2 I], [k3 a~^2, k4 a~]] with a~ the deformed lowering matrix.
inline OperatorMatrix sao_matrix(const KMatrix& K, DeformationKind kind, int dim) {
  require_dim(dim, 3);
  const OperatorMatrix a = deformed_lowering(kind, dim);
  OperatorMatrix m(2 * dim, 2 * dim);
  m.topLeftCorner(dim, dim) = K.k1 * a;
  m.topRightCorner(dim, dim) = K.k2 * OperatorMatrix::Identity(dim, dim);
  m.bottomLeftCorner(dim, dim) = K.k3 * (a * a);
  m.bottomRightCorner(dim, dim) = K.k4 * a;
  return m;
}

/// Rows of a block operator whose Fock index is below dim - margin, in both blocks.
inline Vector truncation_safe_rows(const Vector& v, int dim, int margin = 2) {
  const int keep = dim - margin;
  Vector out(2 * keep);
  out << v.head(keep), v.segment(dim, keep);
  return out;
}

/// max |([H, A] + omega A)_ij| / max |A_ij| over rows and columns below
/// dim - margin in each block. Entries of the deformed A grow like dim^3, so
/// rounding in H A - A H scales with them; the ratio is the meaningful size.
inline double commutator_defect(const OperatorMatrix& h, const OperatorMatrix& a, double omega,
                                int dim, int margin = 2) {
  const OperatorMatrix c = h * a - a * h + omega * a;
  double worst = 0.0;
  double scale = 0.0;
  const int keep = dim - margin;
  for (int bi = 0; bi < 2; ++bi) {
    for (int bj = 0; bj < 2; ++bj) {
      worst = std::max(worst, c.block(bi * dim, bj * dim, keep, keep).cwiseAbs().maxCoeff());
      scale = std::max(scale, a.block(bi * dim, bj * dim, keep, keep).cwiseAbs().maxCoeff());
    }
  }
  return scale > 0.0 ? worst / scale : worst;
}

}  // namespace susy
