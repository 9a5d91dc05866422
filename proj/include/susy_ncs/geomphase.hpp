// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file geomphase.hpp
 * @brief Evolution loop of the SUSY oscillator and the geometric phase
 *        beta = Omega + tau <H> of its supercoherent states (Omega = 0).
 */

#pragma once

#include <susy_ncs/coherent.hpp>
#include <susy_ncs/errors.hpp>
#include <susy_ncs/fock.hpp>
#include <susy_ncs/nlscs.hpp>
#include <susy_ncs/state.hpp>
#include <susy_ncs/susy.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace susy {

struct GeometricPhaseResult {
  double beta = 0.0;         // unwrapped, radians
  double total_phase = 0.0;  // Omega, fixed to 0
  double tau = 0.0;          // loop period 2 pi / omega
  double mean_energy = 0.0;

  static GeometricPhaseResult from_energy(double mean_energy, double omega) {
    GeometricPhaseResult r;
    r.tau = 2.0 * std::numbers::pi / omega;
    r.mean_energy = mean_energy;
    r.beta = r.total_phase + r.tau * mean_energy;
    return r;
  }
};

/// max |(exp(-i H tau) - I)_ij| for the truncated SUSY Hamiltonian, with the
/// propagator assembled from the spectral decomposition of H.
inline double evolution_loop_check(double omega, int dim, double tau) {
  const OperatorMatrix h = susy_hamiltonian(omega, dim);
  const Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(h);
  const Vector phases = (eig.eigenvalues().cast<Complex>() * Complex(0.0, -tau)).array().exp();
  const OperatorMatrix u = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
  return (u - OperatorMatrix::Identity(2 * dim, 2 * dim)).cwiseAbs().maxCoeff();
}

inline double evolution_loop_check(double omega, int dim) {
  return evolution_loop_check(omega, dim, 2.0 * std::numbers::pi / omega);
}

/// beta from the matrix expectation of H on the (normalized) state.
inline GeometricPhaseResult geometric_phase_oracle(const SpinorState& state, double omega = 1.0) {
  const OperatorMatrix h = susy_hamiltonian(omega, state.dim());
  return GeometricPhaseResult::from_energy(expectation(h, state).real(), omega);
}

namespace detail {

/// <H>/omega of the generic superposition from the two-state matrix elements.
/// The lower component sits one quantum higher, so it contributes
/// |Y|^2 sum gamma2a* gamma2b <phi_a|phi_b> on top of its N elements.
inline double closed_form_energy(const SuperCoherentSpec& spec,
                                 const SuperpositionParams& params) {
  require_family(spec.K, KFamily::Generic, "geometric phase closed form");
  const Gammas g = Gammas::of(spec.K, params);
  const MomentWeights w = moment_weights(spec, params);
  const double y2 = std::norm(spec.eigenvalue);
  const Complex pp = spec.phi_plus();
  const Complex pm = spec.phi_minus();

  const CrossElements e_pp = cross_matrix_elements(spec.kind, pp, pp);
  const CrossElements e_mm = cross_matrix_elements(spec.kind, pm, pm);
  const CrossElements e_pm = cross_matrix_elements(spec.kind, pp, pm);

  const double number_part = w.gamma_plus * e_pp.number.real() +
                             w.gamma_minus * e_mm.number.real() +
                             2.0 * (w.gamma_pm * e_pm.number).real();
  const double offset_part = y2 * (std::norm(g.g2p) + std::norm(g.g2m) +
                                   2.0 * (std::conj(g.g2p) * g.g2m * e_pm.overlap).real());
  return (number_part + offset_part) / w.delta;
}

inline GeometricPhaseResult closed_form_beta(const SuperCoherentSpec& spec,
                                             const SuperpositionParams& params, double omega,
                                             DeformationKind expected, const char* who) {
  if (spec.kind != expected) {
    throw DomainError(std::string(who) + ": wrong deformation kind " +
                      std::string(to_string(spec.kind)));
  }
  if (!(omega > 0.0)) throw DomainError(std::string(who) + ": omega must be positive");
  return GeometricPhaseResult::from_energy(omega * closed_form_energy(spec, params), omega);
}

}  // namespace detail

inline GeometricPhaseResult beta_nl(const SuperCoherentSpec& spec,
                                    const SuperpositionParams& params, double omega = 1.0) {
  return detail::closed_form_beta(spec, params, omega, DeformationKind::ShiftedNumber, "beta_nl");
}

inline GeometricPhaseResult beta_NL(const SuperCoherentSpec& spec,
                                    const SuperpositionParams& params, double omega = 1.0) {
  return detail::closed_form_beta(spec, params, omega, DeformationKind::Number, "beta_NL");
}

}  // namespace susy
