// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hypergeom.hpp
 * @brief Generalized hypergeometric series pFq for complex parameters and argument.
 *
 * Every normalizer and moment of the deformed coherent families is a ratio of
 * 0F2 values, so this is the hot path of the library. The series is summed by
 * term recursion,
 *
 *   t(n+1) = t(n) * prod(a_i + n) / prod(b_j + n) * x / (n + 1),
 *
 * which never forms a factorial or a Gamma value. Only p <= q + 1 is accepted;
 * for p == q + 1 the argument must lie strictly inside the unit disc.
 */

#pragma once

#include <susy_ncs/errors.hpp>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace susy {

using Complex = std::complex<double>;

inline constexpr double kDefaultSeriesTolerance = 1e-14;
inline constexpr int kMaxSeriesTerms = 10000;

struct HypergeomParams {
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  Complex argument{0.0, 0.0};
};

namespace detail {

inline bool is_nonpositive_integer(Complex b) {
  if (b.imag() != 0.0) return false;
  const double re = b.real();
  return re <= 0.0 && std::floor(re) == re;
}

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void check_params(const HypergeomParams& params, double tolerance) {
  if (!(tolerance > 0.0)) {
    throw DomainError("pfq: tolerance must be positive");
  }
  if (!is_finite(params.argument)) {
    throw DomainError("pfq: non-finite argument");
  }
  for (Complex b : params.lower) {
    if (!is_finite(b) || is_nonpositive_integer(b)) {
      throw DomainError("pfq: lower parameter is zero or a negative integer");
    }
  }
  for (Complex a : params.upper) {
    if (!is_finite(a)) throw DomainError("pfq: non-finite upper parameter");
  }
  const auto p = params.upper.size();
  const auto q = params.lower.size();
  if (p > q + 1) {
    throw DomainError("pfq: p > q + 1 diverges for every nonzero argument");
  }
  if (p == q + 1 && std::abs(params.argument) >= 1.0) {
    throw DomainError("pfq: p == q + 1 requires |x| < 1");
  }
}

}  // namespace detail

/// Sums pFq(a; b; x). Stops once two consecutive terms fall below
/// `tolerance * |partial sum|`; throws ConvergenceError past kMaxSeriesTerms.
inline Complex pfq(const HypergeomParams& params,
                   double tolerance = kDefaultSeriesTolerance) {
  detail::check_params(params, tolerance);

  const Complex x = params.argument;
  Complex term{1.0, 0.0};
  Complex sum = term;
  int small_in_a_row = 0;

  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    const double dn = static_cast<double>(n);
    Complex ratio = x / (dn + 1.0);
    for (Complex a : params.upper) ratio *= (a + dn);
    for (Complex b : params.lower) ratio /= (b + dn);
    term *= ratio;
    sum += term;

    if (std::abs(term) <= tolerance * std::abs(sum)) {
      if (++small_in_a_row == 2) return sum;
    } else {
      small_in_a_row = 0;
    }
  }
  throw ConvergenceError("pfq: series did not converge within " +
                         std::to_string(kMaxSeriesTerms) + " terms");
}

/// 0F2(; b1, b2; x), the only family the oscillator formulas need.
inline Complex hyp0f2(double b1, double b2, Complex x,
                      double tolerance = kDefaultSeriesTolerance) {
  return pfq(HypergeomParams{{}, {Complex(b1), Complex(b2)}, x}, tolerance);
}

/// Real-argument overload; the result is real for real b1, b2, x.
inline double hyp0f2(double b1, double b2, double x,
                     double tolerance = kDefaultSeriesTolerance) {
  return hyp0f2(b1, b2, Complex(x), tolerance).real();
}

}  // namespace susy
