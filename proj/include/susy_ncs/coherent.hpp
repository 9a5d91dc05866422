// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file coherent.hpp
 * @brief Standard and nonlinear (f-deformed) coherent states of a single
 *        oscillator: Fock expansions and closed-form quadrature moments.
 *
 * Three families are supported, all eigenstates of a~ = f(N) a:
 *
 *   Linear         f = 1      c_n ~ alpha^n / sqrt(n!)            norm^2 = exp(r^2)
 *   ShiftedNumber  f = N + 1  c_n ~ alpha^n / (n! sqrt(n!))       norm^2 = 0F2(1,1; r^2)
 *   Number         f = N      c_{n+1} ~ alpha^n / (n! sqrt((n+1)!)) norm^2 = 0F2(1,2; r^2)
 *
 * Coefficients come from the multiplicative eigen-recurrence
 * c_{n+1} = alpha c_n / (sqrt(n+1) f(n)); the closed-form norm is evaluated
 * separately and the two must agree, which doubles as the truncation check.
 */

#pragma once

#include <susy_ncs/errors.hpp>
#include <susy_ncs/fock.hpp>
#include <susy_ncs/hypergeom.hpp>
#include <susy_ncs/state.hpp>
#include <susy_ncs/uncertainty.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <string>

namespace susy {

/// Largest dropped tail norm^2 (relative) a truncated state may have.
inline constexpr double kTailTolerance = 1e-12;

struct CoherentLabel {
  Complex amplitude;
  DeformationKind family = DeformationKind::Linear;
};

/// First occupied Fock level of the family (|1> for Number, |0> otherwise).
inline int ground_index(DeformationKind family) {
  return family == DeformationKind::Number ? 1 : 0;
}

/// Exact squared norm of the unnormalized series whose leading coefficient is 1.
inline double series_norm2(DeformationKind family, double r) {
  const double r2 = r * r;
  switch (family) {
    case DeformationKind::Linear: return std::exp(r2);
    case DeformationKind::ShiftedNumber: return hyp0f2(1.0, 1.0, r2);
    case DeformationKind::Number: return hyp0f2(1.0, 2.0, r2);
  }
  return 1.0;
}

/// Bare (unnormalized) eigen-series with leading coefficient 1.
inline Vector bare_coefficients(DeformationKind family, Complex alpha, int dim) {
  require_dim(dim);
  Vector c = Vector::Zero(dim);
  const int start = ground_index(family);
  c(start) = 1.0;
  for (int n = start; n + 1 < dim; ++n) {
    c(n + 1) = c(n) * alpha / (std::sqrt(n + 1.0) * deformation_f(family, n));
  }
  return c;
}

/// Term-wise d/dalpha of bare_coefficients, via the product rule on the
/// recurrence: c'_{n+1} = (c_n + alpha c'_n) / (sqrt(n+1) f(n)).
inline Vector bare_derivative_coefficients(DeformationKind family, Complex alpha, int dim) {
  require_dim(dim);
  const Vector c = bare_coefficients(family, alpha, dim);
  Vector d = Vector::Zero(dim);
  const int start = ground_index(family);
  for (int n = start; n + 1 < dim; ++n) {
    d(n + 1) = (c(n) + alpha * d(n)) / (std::sqrt(n + 1.0) * deformation_f(family, n));
  }
  return d;
}

/// Bare series after checking that the truncation keeps all but
/// kTailTolerance of its closed-form norm; throws TruncationError otherwise.
inline Vector checked_bare_coefficients(DeformationKind family, Complex alpha, int dim) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw DomainError("coherent state: non-finite amplitude");
  }
  Vector c = bare_coefficients(family, alpha, dim);
  const double partial = c.squaredNorm();
  const double exact = series_norm2(family, std::abs(alpha));
  const double tail = 1.0 - partial / exact;
  if (tail > kTailTolerance) {
    throw TruncationError("coherent state: |alpha| = " + std::to_string(std::abs(alpha)) +
                          " loses " + std::to_string(tail) + " of the norm at dim " +
                          std::to_string(dim));
  }
  if (tail < -1e-10) {
    throw ConvergenceError("coherent state: series norm exceeds the closed-form normalizer");
  }
  return c;
}

/// Normalized coherent state of the family, truncated to `dim` levels.
inline FockVector build_state(const CoherentLabel& label, int dim) {
  const Vector c = checked_bare_coefficients(label.family, label.amplitude, dim);
  return FockVector(c / c.norm());
}

/// <alpha1|alpha2> between normalized states of one family.
inline Complex coherent_overlap(DeformationKind family, Complex alpha1, Complex alpha2) {
  const Complex arg = std::conj(alpha1) * alpha2;
  const double r1 = std::norm(alpha1);
  const double r2 = std::norm(alpha2);
  switch (family) {
    case DeformationKind::Linear: return std::exp(arg - 0.5 * (r1 + r2));
    case DeformationKind::ShiftedNumber:
      return hyp0f2(1.0, 1.0, arg) / std::sqrt(hyp0f2(1.0, 1.0, r1) * hyp0f2(1.0, 1.0, r2));
    case DeformationKind::Number:
      return hyp0f2(1.0, 2.0, arg) / std::sqrt(hyp0f2(1.0, 2.0, r1) * hyp0f2(1.0, 2.0, r2));
  }
  throw DomainError("coherent_overlap: unknown family");
}

/// Eigenstate of f(N) a for an arbitrary deformation function, built from the
/// running product [g(n)]! = g(n) ... g(1) with g(n) = f(n-1). Supported
/// zero patterns: f(n) != 0 for all n, or f(0) == 0 with f(n) != 0 for n > 0.
inline FockVector build_general_nlcs(const std::function<double(int)>& f, Complex alpha,
                                     int dim) {
  require_dim(dim);
  const bool zero_at_origin = f(0) == 0.0;
  for (int n = 1; n < dim; ++n) {
    if (f(n) == 0.0) {
      throw DomainError("build_general_nlcs: f(" + std::to_string(n) +
                        ") = 0 is not a supported zero pattern");
    }
  }

  Vector c = Vector::Zero(dim);
  if (!zero_at_origin) {
    // z^n / (sqrt(n!) [g(n)]!) on |n>
    double sqrt_fact = 1.0;
    double gfact = 1.0;
    Complex zpow = 1.0;
    c(0) = 1.0;
    for (int n = 1; n < dim; ++n) {
      sqrt_fact *= std::sqrt(static_cast<double>(n));
      gfact *= f(n - 1);
      zpow *= alpha;
      c(n) = zpow / (sqrt_fact * gfact);
    }
  } else {
    // z^n / (sqrt((n+1)!) [f(n)]!) on |n+1>
    double sqrt_fact = 1.0;  // sqrt((n+1)!)
    double ffact = 1.0;
    Complex zpow = 1.0;
    c(1) = 1.0;
    for (int n = 1; n + 1 < dim; ++n) {
      sqrt_fact *= std::sqrt(n + 1.0);
      ffact *= f(n);
      zpow *= alpha;
      c(n + 1) = zpow / (sqrt_fact * ffact);
    }
  }
  const double n2 = c.squaredNorm();
  const double edge = std::norm(c(dim - 1)) + std::norm(c(dim - 2));
  if (!(edge <= kTailTolerance * n2)) {
    throw TruncationError("build_general_nlcs: state has mass at the truncation edge");
  }
  return FockVector(c / std::sqrt(n2));
}

/// beta(r), sigma(r), tau(r), rho(r): the 0F2 ratio combinations entering
/// the moments of the two deformed families.
struct AuxiliaryMoments {
  double beta = 0.0;
  double sigma = 0.0;
  double tau = 0.0;
  double rho = 0.0;

  static AuxiliaryMoments at(double r) {
    const double r2 = r * r;
    const double f11 = hyp0f2(1.0, 1.0, r2);
    const double f12 = hyp0f2(1.0, 2.0, r2);
    const double f22 = hyp0f2(2.0, 2.0, r2);
    const double f13 = hyp0f2(1.0, 3.0, r2);
    const double f23 = hyp0f2(2.0, 3.0, r2);
    AuxiliaryMoments m;
    m.beta = f22 / f11 + 0.5 * f13 / f11;
    m.sigma = f22 / f11 - 0.5 * f13 / f11;
    m.tau = 2.0 * (f12 / f11) * (f12 / f11) - m.beta;
    m.rho = 2.0 * (f22 / f12) * (f22 / f12) - f23 / f12;
    return m;
  }
};

/// Quadrature moments from the closed forms (no Fock truncation involved).
inline UncertaintyReport closed_form_moments(const CoherentLabel& label) {
  const Complex alpha = label.amplitude;
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw DomainError("closed_form_moments: non-finite amplitude");
  }
  const double re = alpha.real();
  const double im = alpha.imag();
  const double re2 = re * re;
  const double im2 = im * im;
  const double r2 = re2 + im2;
  const double s2 = std::sqrt(2.0);

  switch (label.family) {
    case DeformationKind::Linear:
      return UncertaintyReport::from_variances(s2 * re, s2 * im, 0.5 + 2.0 * re2, 0.5 + 2.0 * im2,
                                               0.5, 0.5);
    case DeformationKind::ShiftedNumber: {
      const auto aux = AuxiliaryMoments::at(std::abs(alpha));
      const double ratio = hyp0f2(1.0, 2.0, r2) / hyp0f2(1.0, 1.0, r2);
      return UncertaintyReport::from_variances(
          s2 * re * ratio, s2 * im * ratio, 0.5 + re2 * aux.beta + im2 * aux.sigma,
          0.5 + re2 * aux.sigma + im2 * aux.beta, 0.5 - re2 * aux.tau + im2 * aux.sigma,
          0.5 - im2 * aux.tau + re2 * aux.sigma);
    }
    case DeformationKind::Number: {
      const auto aux = AuxiliaryMoments::at(std::abs(alpha));
      const double f12 = hyp0f2(1.0, 2.0, r2);
      const double ratio = hyp0f2(2.0, 2.0, r2) / f12;
      const double q = hyp0f2(2.0, 3.0, r2) / f12;
      return UncertaintyReport::from_variances(s2 * re * ratio, s2 * im * ratio, 1.5 + re2 * q,
                                               1.5 + im2 * q, 1.5 - re2 * aux.rho,
                                               1.5 - im2 * aux.rho);
    }
  }
  throw DomainError("closed_form_moments: unknown family");
}

/// <alpha1| O |alpha2> between two normalized coherent states of one family.
struct CrossElements {
  Complex overlap;
  Complex x;
  Complex x2;
  Complex p;
  Complex p2;
  Complex number;  // <alpha1| N |alpha2>
};

inline CrossElements cross_matrix_elements(DeformationKind family, Complex alpha1,
                                           Complex alpha2) {
  const Complex i(0.0, 1.0);
  const double s2 = std::sqrt(2.0);
  const Complex a1c = std::conj(alpha1);
  const Complex arg = a1c * alpha2;
  const double r1 = std::norm(alpha1);
  const double r2 = std::norm(alpha2);

  CrossElements e;
  switch (family) {
    case DeformationKind::ShiftedNumber: {
      const double norm = std::sqrt(hyp0f2(1.0, 1.0, r1) * hyp0f2(1.0, 1.0, r2));
      const Complex f11 = hyp0f2(1.0, 1.0, arg);
      const Complex f12 = hyp0f2(1.0, 2.0, arg);
      const Complex f22 = hyp0f2(2.0, 2.0, arg);
      const Complex f13 = hyp0f2(1.0, 3.0, arg);
      const Complex sq = (alpha2 * alpha2 + a1c * a1c) / 2.0;
      e.overlap = f11 / norm;
      e.x = (alpha2 + a1c) / s2 * f12 / norm;
      e.p = (alpha2 - a1c) / (s2 * i) * f12 / norm;
      e.x2 = (sq * f13 + 2.0 * arg * f22 + f11) / (2.0 * norm);
      e.p2 = (-sq * f13 + 2.0 * arg * f22 + f11) / (2.0 * norm);
      e.number = arg * f22 / norm;
      return e;
    }
    case DeformationKind::Number: {
      const double norm = std::sqrt(hyp0f2(1.0, 2.0, r1) * hyp0f2(1.0, 2.0, r2));
      const Complex f12 = hyp0f2(1.0, 2.0, arg);
      const Complex f22 = hyp0f2(2.0, 2.0, arg);
      const Complex f23 = hyp0f2(2.0, 3.0, arg);
      const Complex plus = alpha2 + a1c;
      const Complex minus = alpha2 - a1c;
      e.overlap = f12 / norm;
      e.x = plus / s2 * f22 / norm;
      e.p = minus / (s2 * i) * f22 / norm;
      e.x2 = (plus * plus / 2.0 * f23 + 3.0 * f12) / (2.0 * norm);
      e.p2 = (-minus * minus / 2.0 * f23 + 3.0 * f12) / (2.0 * norm);
      e.number = (arg / 2.0 * f23 + f12) / norm;
      return e;
    }
    case DeformationKind::Linear:
      break;
  }
  throw DomainError("cross_matrix_elements: only the nl and NL families have closed forms here");
}

}  // namespace susy
