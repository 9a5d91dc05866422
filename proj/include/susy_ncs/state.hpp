// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file state.hpp
 * @brief Truncated Fock-space vectors and two-component (spinor) states.
 *
 * A SpinorState stores its lower component in the ordinary Fock basis: lower
 * coefficient m multiplies the energy eigenstate whose lower entry is |m>, i.e.
 * the level with energy (m + 1) * omega. When flattened, coefficients are
 * block-major (all upper entries, then all lower entries).
 */

#pragma once

#include <susy_ncs/errors.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace susy {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;

inline constexpr double kNormalizedTolerance = 1e-12;

class FockVector {
 public:
  explicit FockVector(Vector coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.size() < 2) {
      throw DomainError("FockVector: dimension must be at least 2, got " +
                        std::to_string(coeffs_.size()));
    }
  }

  static FockVector zero(int dim) {
    if (dim < 2) throw DomainError("FockVector: dimension must be at least 2");
    return FockVector(Vector::Zero(dim));
  }

  static FockVector basis(int dim, int n) {
    if (n < 0 || n >= dim) throw DomainError("FockVector: basis index out of range");
    FockVector v = zero(dim);
    v.coeffs_(n) = 1.0;
    return v;
  }

  int dim() const { return static_cast<int>(coeffs_.size()); }
  const Vector& coefficients() const { return coeffs_; }
  Complex operator[](int n) const { return coeffs_(n); }

  double norm2() const { return coeffs_.squaredNorm(); }
  double norm() const { return coeffs_.norm(); }
  bool is_normalized() const { return std::abs(norm2() - 1.0) < kNormalizedTolerance; }

  FockVector normalized() const {
    const double n = norm();
    if (!(n > 0.0)) throw DomainError("FockVector: cannot normalize a zero vector");
    return FockVector(coeffs_ / n);
  }

  FockVector scaled(Complex c) const { return FockVector(coeffs_ * c); }

  friend FockVector operator+(const FockVector& a, const FockVector& b) {
    check_same_dim(a, b);
    return FockVector(a.coeffs_ + b.coeffs_);
  }
  friend FockVector operator-(const FockVector& a, const FockVector& b) {
    check_same_dim(a, b);
    return FockVector(a.coeffs_ - b.coeffs_);
  }
  friend FockVector operator*(Complex c, const FockVector& v) { return v.scaled(c); }

  /// <a|b>, antilinear in the first argument.
  friend Complex inner(const FockVector& a, const FockVector& b) {
    check_same_dim(a, b);
    return a.coeffs_.dot(b.coeffs_);
  }

  /// Copy into a larger space, padding with zeros.
  FockVector padded(int dim) const {
    if (dim < this->dim()) throw DomainError("FockVector::padded: cannot shrink");
    Vector out = Vector::Zero(dim);
    out.head(coeffs_.size()) = coeffs_;
    return FockVector(std::move(out));
  }

 private:
  static void check_same_dim(const FockVector& a, const FockVector& b) {
    if (a.dim() != b.dim()) throw DomainError("FockVector: dimension mismatch");
  }

  Vector coeffs_;
};

struct SpinorState {
  FockVector upper;
  FockVector lower;

  SpinorState(FockVector up, FockVector low) : upper(std::move(up)), lower(std::move(low)) {
    if (upper.dim() != lower.dim()) {
      throw DomainError("SpinorState: upper and lower dimensions differ");
    }
  }

  static SpinorState zero(int dim) { return {FockVector::zero(dim), FockVector::zero(dim)}; }

  /// Rebuilds from a block-major vector of length 2 * dim.
  static SpinorState from_stacked(const Vector& v) {
    if (v.size() % 2 != 0) throw DomainError("SpinorState: odd stacked length");
    const auto d = v.size() / 2;
    return {FockVector(v.head(d)), FockVector(v.tail(d))};
  }

  int dim() const { return upper.dim(); }

  Vector stacked() const {
    Vector v(2 * dim());
    v << upper.coefficients(), lower.coefficients();
    return v;
  }

  double norm2() const { return upper.norm2() + lower.norm2(); }
  double norm() const { return std::sqrt(norm2()); }
  bool is_normalized() const { return std::abs(norm2() - 1.0) < kNormalizedTolerance; }

  SpinorState normalized() const {
    const double n = norm();
    if (!(n > 0.0)) throw DomainError("SpinorState: cannot normalize a zero state");
    return {upper.scaled(1.0 / n), lower.scaled(1.0 / n)};
  }

  SpinorState scaled(Complex c) const { return {upper.scaled(c), lower.scaled(c)}; }

  friend SpinorState operator+(const SpinorState& a, const SpinorState& b) {
    return {a.upper + b.upper, a.lower + b.lower};
  }
  friend SpinorState operator-(const SpinorState& a, const SpinorState& b) {
    return {a.upper - b.upper, a.lower - b.lower};
  }
  friend SpinorState operator*(Complex c, const SpinorState& s) { return s.scaled(c); }

  friend Complex inner(const SpinorState& a, const SpinorState& b) {
    return inner(a.upper, b.upper) + inner(a.lower, b.lower);
  }
};

/// Phase-insensitive distance between the rays of two nonzero states,
/// min over chi of || a/|a| - exp(i chi) b/|b| ||.
inline double ray_distance(const SpinorState& a, const SpinorState& b) {
  const double overlap = std::abs(inner(a, b)) / (a.norm() * b.norm());
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * overlap));
}

}  // namespace susy
