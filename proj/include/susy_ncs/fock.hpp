// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Dense truncated-Fock-space operators and the brute-force oracles.
 *
 * Everything here is deliberately naive: operators are explicit dim x dim
 * matrices, eigenvectors come from a least-squares solve, and expectation
 * values are plain matrix sandwiches. The closed-form modules are checked
 * against these routines, so none of them reuse the closed-form machinery.
 *
 * Truncation edge: the lowering matrix has sqrt(n) on the first superdiagonal
 * and the raising matrix is its adjoint, so [a, a^dagger] equals the identity
 * except in the last basis direction.
 */

#pragma once

#include <susy_ncs/errors.hpp>
#include <susy_ncs/state.hpp>
#include <susy_ncs/uncertainty.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace susy {

using OperatorMatrix = Eigen::MatrixXcd;

inline constexpr int kDefaultDim = 64;
inline constexpr double kOracleResidualTolerance = 1e-8;

/// Deformation function f of the annihilation operator a~ = f(N) a.
enum class DeformationKind {
  Linear,         // f(N) = 1
  ShiftedNumber,  // f(N) = N + 1
  Number,         // f(N) = N
};

inline double deformation_f(DeformationKind kind, double n) {
  switch (kind) {
    case DeformationKind::Linear: return 1.0;
    case DeformationKind::ShiftedNumber: return n + 1.0;
    case DeformationKind::Number: return n;
  }
  return 1.0;
}

inline std::string_view to_string(DeformationKind kind) {
  switch (kind) {
    case DeformationKind::Linear: return "linear";
    case DeformationKind::ShiftedNumber: return "nl";
    case DeformationKind::Number: return "NL";
  }
  return "?";
}

inline void require_dim(int dim, int minimum = 2) {
  if (dim < minimum) {
    throw DomainError("truncation dimension must be at least " + std::to_string(minimum) +
                      ", got " + std::to_string(dim));
  }
}

struct LadderMatrices {
  OperatorMatrix lowering;
  OperatorMatrix raising;
  OperatorMatrix number;
};

inline LadderMatrices ladder_matrices(int dim) {
  require_dim(dim);
  OperatorMatrix a = OperatorMatrix::Zero(dim, dim);
  OperatorMatrix n = OperatorMatrix::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  OperatorMatrix adag = a.adjoint();
  return {std::move(a), std::move(adag), std::move(n)};
}

/// a~|n> = sqrt(n) f(n-1) |n-1>.
inline OperatorMatrix deformed_lowering(DeformationKind kind, int dim) {
  require_dim(dim);
  OperatorMatrix a = OperatorMatrix::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) {
    a(k - 1, k) = std::sqrt(static_cast<double>(k)) * deformation_f(kind, k - 1.0);
  }
  return a;
}

struct QuadratureMatrices {
  OperatorMatrix position;
  OperatorMatrix momentum;
};

/// x = (a + a^dagger)/sqrt(2), p = (a - a^dagger)/(i sqrt(2)).
inline QuadratureMatrices quadrature_matrices(int dim) {
  const auto ladder = ladder_matrices(dim);
  const double s = std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  return {(ladder.lowering + ladder.raising) / s, (ladder.lowering - ladder.raising) / (i * s)};
}

struct OracleEigenstate {
  std::vector<Vector> vectors;  // one per free slot, that slot set to 1
  double residual = 0.0;        // max relative residual ||(op - lambda) v|| / ||v||
};

/**
 * Least-squares eigenvector oracle. Each free slot parameterizes one null
 * direction: its coefficient is pinned to 1 (the other free slots to 0) and
 * the remaining coefficients minimize ||(op - eigenvalue I) v||. Throws
 * NoEigenvectorError when the best residual exceeds `residual_tolerance`.
 */
inline OracleEigenstate oracle_eigenstate(const OperatorMatrix& op, Complex eigenvalue,
                                          std::span<const int> free_slots,
                                          double residual_tolerance = kOracleResidualTolerance) {
  if (op.rows() != op.cols()) throw DomainError("oracle_eigenstate: operator is not square");
  if (!std::isfinite(eigenvalue.real()) || !std::isfinite(eigenvalue.imag())) {
    throw DomainError("oracle_eigenstate: non-finite eigenvalue");
  }
  const int n = static_cast<int>(op.rows());
  if (free_slots.empty()) throw DomainError("oracle_eigenstate: need at least one free slot");

  std::vector<int> rest;
  for (int k = 0; k < n; ++k) {
    if (std::find(free_slots.begin(), free_slots.end(), k) == free_slots.end()) rest.push_back(k);
  }
  for (int s : free_slots) {
    if (s < 0 || s >= n) throw DomainError("oracle_eigenstate: free slot out of range");
  }

  const OperatorMatrix shifted = op - eigenvalue * OperatorMatrix::Identity(n, n);
  OperatorMatrix reduced(n, static_cast<Eigen::Index>(rest.size()));
  for (std::size_t c = 0; c < rest.size(); ++c) reduced.col(c) = shifted.col(rest[c]);
  const Eigen::CompleteOrthogonalDecomposition<OperatorMatrix> solver(reduced);

  OracleEigenstate out;
  for (int s : free_slots) {
    const Vector rhs = -shifted.col(s);
    const Vector sol = solver.solve(rhs);
    Vector v = Vector::Zero(n);
    v(s) = 1.0;
    for (std::size_t c = 0; c < rest.size(); ++c) v(rest[c]) = sol(c);
    const double res = (shifted * v).norm() / v.norm();
    out.residual = std::max(out.residual, res);
    out.vectors.push_back(std::move(v));
  }
  if (!(out.residual <= residual_tolerance)) {
    throw NoEigenvectorError("oracle_eigenstate: residual " + std::to_string(out.residual) +
                             " exceeds tolerance");
  }
  return out;
}

inline OracleEigenstate oracle_eigenstate(const OperatorMatrix& op, Complex eigenvalue,
                                          std::initializer_list<int> free_slots,
                                          double residual_tolerance = kOracleResidualTolerance) {
  const std::vector<int> slots(free_slots);
  return oracle_eigenstate(op, eigenvalue, std::span<const int>(slots), residual_tolerance);
}

/// <psi|op|psi> / <psi|psi>.
inline Complex expectation(const OperatorMatrix& op, const FockVector& state) {
  if (op.rows() != state.dim() || op.cols() != state.dim()) {
    throw DomainError("expectation: operator and state dimensions differ");
  }
  const double n2 = state.norm2();
  if (!(n2 > 0.0)) throw DomainError("expectation: zero-norm state");
  const Vector& v = state.coefficients();
  return v.dot(op * v) / n2;
}

/// Spinor expectation. A dim x dim operator acts identically on both
/// components; a 2dim x 2dim operator is applied as a block operator.
inline Complex expectation(const OperatorMatrix& op, const SpinorState& state) {
  const double n2 = state.norm2();
  if (!(n2 > 0.0)) throw DomainError("expectation: zero-norm state");
  const int d = state.dim();
  if (op.rows() == d && op.cols() == d) {
    const Vector& u = state.upper.coefficients();
    const Vector& l = state.lower.coefficients();
    return (u.dot(op * u) + l.dot(op * l)) / n2;
  }
  if (op.rows() == 2 * d && op.cols() == 2 * d) {
    const Vector v = state.stacked();
    return v.dot(op * v) / n2;
  }
  throw DomainError("expectation: operator and state dimensions differ");
}

/// Moments of x and p by direct matrix sandwiches; <x^2> = ||x psi||^2 / ||psi||^2
/// since the truncated x is Hermitian (identical to sandwiching x * x).
inline UncertaintyReport oracle_moments(const FockVector& state) {
  const auto q = quadrature_matrices(state.dim());
  const double n2 = state.norm2();
  if (!(n2 > 0.0)) throw DomainError("oracle_moments: zero-norm state");
  const Vector& v = state.coefficients();
  const Vector xv = q.position * v;
  const Vector pv = q.momentum * v;
  return UncertaintyReport::from_moments(v.dot(xv).real() / n2, v.dot(pv).real() / n2,
                                         xv.squaredNorm() / n2, pv.squaredNorm() / n2);
}

inline UncertaintyReport oracle_moments(const SpinorState& state) {
  const auto q = quadrature_matrices(state.dim());
  const double n2 = state.norm2();
  if (!(n2 > 0.0)) throw DomainError("oracle_moments: zero-norm state");
  double mx = 0.0, mp = 0.0, mx2 = 0.0, mp2 = 0.0;
  for (const FockVector* part : {&state.upper, &state.lower}) {
    const Vector& v = part->coefficients();
    const Vector xv = q.position * v;
    const Vector pv = q.momentum * v;
    mx += v.dot(xv).real();
    mp += v.dot(pv).real();
    mx2 += xv.squaredNorm();
    mp2 += pv.squaredNorm();
  }
  return UncertaintyReport::from_moments(mx / n2, mp / n2, mx2 / n2, mp2 / n2);
}

}  // namespace susy
