// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file nlscs.hpp
 * @brief Linear and nonlinear supercoherent states: eigenstates of the
 *        (deformed) SAO for every K family, their superpositions, and the
 *        closed-form uncertainty products of the generic superposition.
 *
 * Conventions used throughout:
 *  - phi_pm = eigenvalue / kappa_pm label the component coherent states.
 *  - |Y_pm> = (k2 kappa_pm |phi_pm>, (kappa_pm - k1) Y |phi_pm>) use the
 *    *normalized* coherent states and are stored unnormalized.
 *  - The A/C basis and the degenerate family use the *bare* series (leading
 *    coefficient 1) and its term-wise derivative; with that reading the primed
 *    parameters s0' = s0 / k1 and t1' = t1 / (Y k1) map exactly onto the free
 *    coefficients of the forward recurrence.
 */

#pragma once

#include <susy_ncs/coherent.hpp>
#include <susy_ncs/errors.hpp>
#include <susy_ncs/fock.hpp>
#include <susy_ncs/state.hpp>
#include <susy_ncs/susy.hpp>
#include <susy_ncs/uncertainty.hpp>

#include <cmath>
#include <complex>
#include <string>
#include <utility>

namespace susy {

/// Relative eigenvalue gap below which the generic formulas are abandoned for
/// the degenerate construction.
inline constexpr double kDegenerateSwitch = 1e-6;

struct SuperCoherentSpec {
  KMatrix K;
  DeformationKind kind = DeformationKind::ShiftedNumber;
  Complex eigenvalue;
  int dim = kDefaultDim;

  Complex phi_plus() const { return scaled_eigenvalue(K.kappa_plus); }
  Complex phi_minus() const { return scaled_eigenvalue(K.kappa_minus); }

  /// eigenvalue / (k1 + k4), the label used by the singular family.
  Complex phi_singular() const {
    const Complex tr = K.trace();
    if (tr == 0.0) throw DomainError("singular family: k1 + k4 = 0 leaves phi undefined");
    return eigenvalue / tr;
  }

 private:
  Complex scaled_eigenvalue(Complex kappa) const {
    if (kappa == 0.0) throw DomainError("phi is undefined for a zero K eigenvalue");
    return eigenvalue / kappa;
  }
};

struct SuperpositionParams {
  double eta = 0.0;
  double lambda = 0.0;
};

/// Superposition weights of the phi_pm states in the upper (1) and lower (2)
/// components; the lower ones still multiply the eigenvalue.
struct Gammas {
  Complex g1p, g1m, g2p, g2m;

  static Gammas of(const KMatrix& K, const SuperpositionParams& params) {
    const Complex phase = std::polar(1.0, params.lambda);
    const double c = std::cos(params.eta);
    const double s = std::sin(params.eta);
    return {K.k2 * K.kappa_plus * c, K.k2 * K.kappa_minus * phase * s,
            (K.kappa_plus - K.k1) * c, (K.kappa_minus - K.k1) * phase * s};
  }
};

struct MomentWeights {
  double gamma_plus = 0.0;   // |g1+|^2 + |g2+ Y|^2
  double gamma_minus = 0.0;  // |g1-|^2 + |g2- Y|^2
  Complex gamma_pm;          // g1+* g1- + g2+* g2- |Y|^2
  double delta = 0.0;        // squared joint norm of the superposition
};

inline MomentWeights moment_weights(const SuperCoherentSpec& spec,
                                    const SuperpositionParams& params) {
  const Gammas g = Gammas::of(spec.K, params);
  const double y2 = std::norm(spec.eigenvalue);
  MomentWeights w;
  w.gamma_plus = std::norm(g.g1p) + std::norm(g.g2p) * y2;
  w.gamma_minus = std::norm(g.g1m) + std::norm(g.g2m) * y2;
  w.gamma_pm = std::conj(g.g1p) * g.g1m + std::conj(g.g2p) * g.g2m * y2;
  const Complex overlap = coherent_overlap(spec.kind, spec.phi_plus(), spec.phi_minus());
  w.delta = w.gamma_plus + w.gamma_minus + 2.0 * (w.gamma_pm * overlap).real();
  return w;
}

/// ||(A - eigenvalue) S|| / ||S|| over the rows below dim - margin in each block.
inline double eigen_residual(const SpinorState& state, const KMatrix& K, DeformationKind kind,
                             Complex eigenvalue, int margin = 2) {
  const int d = state.dim();
  const Vector v = state.stacked();
  const Vector r = sao_matrix(K, kind, d) * v - eigenvalue * v;
  return truncation_safe_rows(r, d, margin).norm() / v.norm();
}

/**
 * Forward solution of the eigen-recurrence. `free_params` are the raw free
 * coefficients: (s0, t1) for Linear/ShiftedNumber, i.e. the upper |0> and
 * lower |0> entries; (u1, v2) for Number, the upper |1> and lower |1> entries
 * (the Number deformation forces u0 = v1 = 0). Coefficients past `n_terms`
 * (default: dim) are left at zero.
 */
inline SpinorState recurrence_solve(const SuperCoherentSpec& spec,
                                    std::pair<Complex, Complex> free_params, int n_terms = 0) {
  const KMatrix& K = spec.K;
  if (K.family == KFamily::Singular) {
    throw FamilyError("recurrence_solve: K is singular; use build_singular");
  }
  if (K.k1 == 0.0) throw DomainError("recurrence_solve: k1 = 0 leaves the first step undetermined");
  const int d = spec.dim;
  require_dim(d, 3);
  if (n_terms <= 0) n_terms = d;
  if (n_terms > d) throw DomainError("recurrence_solve: n_terms exceeds dim");
  require_dim(n_terms, 3);
  const Complex y = spec.eigenvalue;
  const auto f = [&](double n) { return deformation_f(spec.kind, n); };
  const auto up_factor = [&](int n) { return std::sqrt(n + 1.0) * f(n); };  // a~|n+1> -> |n>
  const auto low_factor = [&](int n) { return std::sqrt(static_cast<double>(n)) * f(n - 1.0); };

  Vector u = Vector::Zero(d);
  Vector l = Vector::Zero(d);
  const int start = ground_index(spec.kind);
  u(start) = free_params.first;
  l(start) = free_params.second;
  u(start + 1) = (y * u(start) - K.k2 * l(start)) / (K.k1 * up_factor(start));

  const Complex det = K.determinant();
  for (int n = start + 1; n + 1 < n_terms; ++n) {
    // [k1 a, k2; k3 b a, k4 b] (u_{n+1}, l_n) = Y (u_n, l_{n-1})
    const double a = up_factor(n);
    const double b = low_factor(n);
    const Complex r1 = y * u(n);
    const Complex r2 = y * l(n - 1);
    const Complex m_det = a * b * det;
    u(n + 1) = (K.k4 * b * r1 - K.k2 * r2) / m_det;
    l(n) = (K.k1 * a * r2 - K.k3 * b * a * r1) / m_det;
  }
  return {FockVector(std::move(u)), FockVector(std::move(l))};
}

struct SupercoherentPair {
  SpinorState plus;
  SpinorState minus;
};

inline void require_family(const KMatrix& K, KFamily wanted, const char* who) {
  if (K.family != wanted) {
    throw FamilyError(std::string(who) + ": K family is " + std::string(to_string(K.family)) +
                      ", expected " + std::string(to_string(wanted)));
  }
}

/// |Y_pm> built from normalized phi_pm states; returned unnormalized.
inline SupercoherentPair build_generic(const SuperCoherentSpec& spec) {
  require_family(spec.K, KFamily::Generic, "build_generic");
  const KMatrix& K = spec.K;
  const auto one = [&](Complex kappa, Complex phi) {
    const FockVector coh = build_state({phi, spec.kind}, spec.dim);
    return SpinorState(coh.scaled(K.k2 * kappa), coh.scaled((kappa - K.k1) * spec.eigenvalue));
  };
  return {one(K.kappa_plus, spec.phi_plus()), one(K.kappa_minus, spec.phi_minus())};
}

/// s0' |Y_A> + t1' |Y_C>, the G-matrix combinations of the bare phi_pm series.
inline SpinorState build_A_C_basis(const SuperCoherentSpec& spec, Complex s0p, Complex t1p) {
  require_family(spec.K, KFamily::Generic, "build_A_C_basis");
  const KMatrix& K = spec.K;
  const Complex kp = K.kappa_plus;
  const Complex km = K.kappa_minus;
  const Complex y = spec.eigenvalue;
  const Complex gap = kp - km;
  const Vector ep = checked_bare_coefficients(spec.kind, spec.phi_plus(), spec.dim);
  const Vector em = checked_bare_coefficients(spec.kind, spec.phi_minus(), spec.dim);
  const Complex q = K.k1 * K.k1 + K.k2 * K.k3;

  const Vector a_up = (kp * (kp - K.k4) * ep - km * (km - K.k4) * em) / gap;
  const Vector a_low = K.k3 * y * (ep - em) / gap;
  const Vector c_up = K.k2 * kp * km * (ep - em) / gap;
  const Vector c_low = y * ((K.k1 * kp - q) * ep - (K.k1 * km - q) * em) / gap;
  return {FockVector(s0p * a_up + t1p * c_up), FockVector(s0p * a_low + t1p * c_low)};
}

/// Degenerate family: G^d combinations of the bare series |phi> and its
/// term-wise derivative |phi'>.
inline SpinorState build_degenerate(const SuperCoherentSpec& spec, Complex s0p, Complex t1p) {
  require_family(spec.K, KFamily::Degenerate, "build_degenerate");
  const KMatrix& K = spec.K;
  const Complex kappa = K.kappa_plus;
  const Complex phi = spec.eigenvalue / kappa;
  const Vector e = checked_bare_coefficients(spec.kind, phi, spec.dim);
  const Vector de = bare_derivative_coefficients(spec.kind, phi, spec.dim);
  const double edge = std::norm(de(spec.dim - 1)) + std::norm(de(spec.dim - 2));
  if (!(edge <= kTailTolerance * std::max(de.squaredNorm(), 1.0))) {
    throw TruncationError("build_degenerate: derivative series reaches the truncation edge");
  }

  const Vector a_up = K.k1 * e - (kappa - K.k4) * phi * de;
  const Vector a_low = -K.k3 * phi * phi * de;
  const Vector c_up = kappa * (-K.k2 * phi * de);
  const Vector c_low = kappa * (K.k1 * phi * e - (K.k4 - K.k1) / 2.0 * phi * phi * de);
  return {FockVector(s0p * a_up + t1p * c_up), FockVector(s0p * a_low + t1p * c_low)};
}

/// Singular family: (k1 |phi>, k3 phi |phi>) with phi = eigenvalue / (k1 + k4).
inline SpinorState build_singular(const SuperCoherentSpec& spec) {
  require_family(spec.K, KFamily::Singular, "build_singular");
  const Complex phi = spec.phi_singular();
  if (spec.K.k1 == 0.0 && spec.K.k3 == 0.0) {
    throw DomainError("build_singular: k1 = k3 = 0 gives the zero state");
  }
  const FockVector coh = build_state({phi, spec.kind}, spec.dim);
  return {coh.scaled(spec.K.k1), coh.scaled(spec.K.k3 * phi)};
}

/// Dispatches on the K family. Generic K within kDegenerateSwitch of the
/// degenerate boundary is routed through the degenerate construction at the
/// mean eigenvalue.
inline SpinorState build_eigenstate(const SuperCoherentSpec& spec, Complex s0p, Complex t1p) {
  switch (spec.K.family) {
    case KFamily::Singular:
      return build_singular(spec);
    case KFamily::Degenerate:
      return build_degenerate(spec, s0p, t1p);
    case KFamily::Generic: {
      const KMatrix& K = spec.K;
      const double gap = std::abs(K.kappa_plus - K.kappa_minus);
      if (gap < kDegenerateSwitch * (std::abs(K.kappa_plus) + std::abs(K.kappa_minus))) {
        SuperCoherentSpec near = spec;
        near.K.family = KFamily::Degenerate;
        near.K.kappa_plus = near.K.kappa_minus = K.trace() / 2.0;
        return build_degenerate(near, s0p, t1p);
      }
      return build_A_C_basis(spec, s0p, t1p);
    }
  }
  throw DomainError("build_eigenstate: unknown K family");
}

/// cos(eta) |+> + exp(i lambda) sin(eta) |->.
inline SpinorState superpose(const SupercoherentPair& pair, const SuperpositionParams& params) {
  if (pair.plus.dim() != pair.minus.dim()) throw DomainError("superpose: dimension mismatch");
  return Complex(std::cos(params.eta)) * pair.plus +
         std::polar(std::sin(params.eta), params.lambda) * pair.minus;
}

/// The generic superposition, built explicitly in Fock space.
inline SpinorState build_superposition(const SuperCoherentSpec& spec,
                                       const SuperpositionParams& params) {
  return superpose(build_generic(spec), params);
}

/**
 * Closed-form moments of the generic superposition for the nl and NL
 * deformations. Diagonal terms use the single-state moments, the cross term
 * the two-state matrix elements, all weighted by Gamma^+, Gamma^-, Gamma^{+-}
 * and divided by the squared joint norm Delta.
 */
inline UncertaintyReport closed_form_spinor_moments(const SuperCoherentSpec& spec,
                                                    const SuperpositionParams& params) {
  require_family(spec.K, KFamily::Generic, "closed_form_spinor_moments");
  if (spec.kind == DeformationKind::Linear) {
    throw DomainError("closed_form_spinor_moments: no closed form for the linear kind");
  }
  const Complex pp = spec.phi_plus();
  const Complex pm = spec.phi_minus();
  const MomentWeights w = moment_weights(spec, params);
  const UncertaintyReport sp = closed_form_moments({pp, spec.kind});
  const UncertaintyReport sm = closed_form_moments({pm, spec.kind});
  const CrossElements cross = cross_matrix_elements(spec.kind, pp, pm);

  const auto weigh = [&](double plus, double minus, Complex mixed) {
    return (w.gamma_plus * plus + w.gamma_minus * minus + 2.0 * (w.gamma_pm * mixed).real()) /
           w.delta;
  };
  return UncertaintyReport::from_moments(weigh(sp.mean_x, sm.mean_x, cross.x),
                                         weigh(sp.mean_p, sm.mean_p, cross.p),
                                         weigh(sp.mean_x2, sm.mean_x2, cross.x2),
                                         weigh(sp.mean_p2, sm.mean_p2, cross.p2));
}

}  // namespace susy
