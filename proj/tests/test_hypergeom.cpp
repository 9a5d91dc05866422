// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

#include "test_support.hpp"

#include <susy_ncs/hypergeom.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

using namespace susy;

namespace {

// Fixed-length direct summation in long double, 200 terms.
std::complex<long double> direct_0f2(long double b1, long double b2, std::complex<long double> x) {
  std::complex<long double> sum = 0.0L, term = 1.0L;
  for (int n = 0; n < 200; ++n) {
    sum += term;
    term *= x / ((b1 + n) * (b2 + n) * static_cast<long double>(n + 1));
  }
  return sum;
}

}  // namespace

TEST(Hypergeom, ValueAtZeroIsOne) {
  EXPECT_EQ(hyp0f2(1.0, 1.0, 0.0), 1.0);
  EXPECT_EQ(hyp0f2(1.0, 2.0, 0.0), 1.0);
  EXPECT_EQ(pfq({{2.5}, {1.0, 3.0}, 0.0}), Complex(1.0));
}

// Reference digits from a 40-digit mpmath evaluation.
TEST(Hypergeom, FrozenReferenceValues) {
  EXPECT_NEAR(hyp0f2(1.0, 1.0, 1.0), 2.129702548983306418134523610595413468319, 1e-15);
  EXPECT_NEAR(hyp0f2(1.0, 2.0, 1.0), 1.542838638501002571532575315139475211168, 1e-15);
  const Complex z = hyp0f2(2.0, 2.0, Complex(0.3, -1.7));
  EXPECT_NEAR(z.real(), 1.035386182372253865968603953017099993932, 1e-15);
  EXPECT_NEAR(z.imag(), -0.4378615252634906924766916787135480161532, 1e-15);
  EXPECT_NEAR(hyp0f2(1.0, 1.0, 100.0) / 22637.4958043382713437310419631429188984, 1.0, 1e-14);
  EXPECT_NEAR(hyp0f2(1.0, 1.0, -100.0), -0.2135000092734599022559705131522629826497, 1e-11);
}

TEST(Hypergeom, MatchesDirectSumAtOne) {
  const long double ref = direct_0f2(1.0L, 1.0L, 1.0L).real();
  EXPECT_NEAR(hyp0f2(1.0, 1.0, 1.0), static_cast<double>(ref), 1e-14);
}

TEST(Hypergeom, GeneralPfqKnownForms) {
  // 0F0(;;x) = e^x, 1F0(a;;x) = (1 - x)^-a
  EXPECT_NEAR(std::abs(pfq({{}, {}, Complex(0.7, 0.2)}) - std::exp(Complex(0.7, 0.2))), 0.0, 1e-14);
  EXPECT_NEAR(pfq({{2.0}, {}, 0.3}).real(), 1.0 / (0.7 * 0.7), 1e-13);
}

TEST(Hypergeom, DomainErrors) {
  EXPECT_THROW(hyp0f2(1.0, 1.0, 1.0, 0.0), DomainError);
  EXPECT_THROW(hyp0f2(1.0, 1.0, 1.0, -1e-3), DomainError);
  EXPECT_THROW(hyp0f2(0.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(hyp0f2(1.0, -3.0, 1.0), DomainError);
  EXPECT_THROW(hyp0f2(1.0, 1.0, std::nan("")), DomainError);
  EXPECT_THROW(hyp0f2(1.0, 1.0, Complex(INFINITY, 0.0)), DomainError);
  EXPECT_THROW(pfq({{1.0, 1.0, 1.0}, {1.0}, 0.5}), DomainError);
  EXPECT_THROW(pfq({{1.0}, {}, 1.0}), DomainError);
  EXPECT_NO_THROW(hyp0f2(-0.5, 1.0, 1.0));  // negative but not an integer
}

TEST(Hypergeom, TermCapRaisesConvergenceError) {
  // (1 - x)^-1 at x = 0.9999 needs far more than the term cap
  EXPECT_THROW(pfq({{1.0}, {}, 0.9999}), ConvergenceError);
}

TEST(HypergeomProperty, ConjugationSymmetry) {
  testing_support::Draws draws(11);
  for (int i = 0; i < 200; ++i) {
    const Complex x = draws.complex_in_box(30.0);
    const double b1 = draws.uniform(0.2, 4.0);
    const double b2 = draws.uniform(0.2, 4.0);
    const Complex a = hyp0f2(b1, b2, x);
    const Complex b = hyp0f2(b1, b2, std::conj(x));
    EXPECT_NEAR(std::abs(a - std::conj(b)), 0.0, 1e-13 * std::max(1.0, std::abs(a))) << x;
  }
}

TEST(HypergeomProperty, RealPositiveArgumentIsIncreasingAndAtLeastOne) {
  for (auto [b1, b2] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {2.0, 2.0}, {1.0, 3.0}, {2.0, 3.0}}) {
    double prev = hyp0f2(b1, b2, 0.0);
    EXPECT_GE(prev, 1.0);
    for (double x = 0.05; x <= 100.0; x += 0.05) {
      const double v = hyp0f2(b1, b2, x);
      ASSERT_GT(v, prev) << "b = (" << b1 << ", " << b2 << "), x = " << x;
      prev = v;
    }
  }
}

TEST(HypergeomProperty, AgreesWithDirectSummation) {
  testing_support::Draws draws(12);
  for (int i = 0; i < 300; ++i) {
    const Complex x = std::polar(draws.uniform(0.0, 100.0), draws.uniform(0.0, 6.3));
    const double b1 = draws.uniform(0.5, 3.0);
    const double b2 = draws.uniform(0.5, 3.0);
    const auto ref = direct_0f2(b1, b2, {x.real(), x.imag()});
    const Complex got = hyp0f2(b1, b2, x);
    // alternating terms can be ~1e4 times the sum; scale by the largest term magnitude
    long double peak = 0.0L, term = 1.0L;
    for (int n = 0; n < 200; ++n) {
      peak = std::max(peak, term);
      term *= std::abs(x) / ((b1 + n) * (b2 + n) * static_cast<long double>(n + 1));
    }
    const double scale = std::max<double>(std::abs(got), static_cast<double>(peak));
    EXPECT_NEAR(std::abs(got - Complex(double(ref.real()), double(ref.imag()))), 0.0,
                10.0 * kDefaultSeriesTolerance * scale)
        << "x = " << x;
  }
}
