// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

#include "test_support.hpp"

#include <susy_ncs/coherent.hpp>
#include <susy_ncs/fock.hpp>
#include <susy_ncs/susy.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace susy;

TEST(FockVector, RejectsTinyDimensions) {
  EXPECT_THROW(FockVector(Vector::Zero(1)), DomainError);
  EXPECT_THROW(FockVector::zero(1), DomainError);
  EXPECT_THROW(FockVector::basis(4, 4), DomainError);
  EXPECT_TRUE(FockVector::basis(4, 2).is_normalized());
  EXPECT_FALSE(FockVector::basis(4, 2).scaled(1.0 + 1e-9).is_normalized());
}

TEST(Ladder, TwoLevelLowering) {
  const auto l = ladder_matrices(2);
  EXPECT_EQ(l.lowering(0, 0), Complex(0.0));
  EXPECT_EQ(l.lowering(0, 1), Complex(1.0));
  EXPECT_EQ(l.lowering(1, 0), Complex(0.0));
  EXPECT_EQ(l.lowering(1, 1), Complex(0.0));
  EXPECT_THROW(ladder_matrices(1), DomainError);
}

TEST(Ladder, NumberKillsVacuumAndCommutatorIsIdentityAwayFromEdge) {
  const int d = 10;
  const auto l = ladder_matrices(d);
  EXPECT_EQ((l.number * FockVector::basis(d, 0).coefficients()).norm(), 0.0);
  const OperatorMatrix c = l.lowering * l.raising - l.raising * l.lowering;
  EXPECT_NEAR((c.topLeftCorner(d - 1, d - 1) - OperatorMatrix::Identity(d - 1, d - 1)).norm(), 0.0,
              1e-13);
  EXPECT_NEAR(std::abs(c(d - 1, d - 1) - Complex(1.0 - d)), 0.0, 1e-12);  // the truncation edge
}

TEST(DeformedLowering, Kinds) {
  const int d = 6;
  EXPECT_EQ(deformed_lowering(DeformationKind::Linear, d), ladder_matrices(d).lowering);
  const Vector one = FockVector::basis(d, 1).coefficients();
  EXPECT_EQ((deformed_lowering(DeformationKind::Number, d) * one).norm(), 0.0);
  const OperatorMatrix s = deformed_lowering(DeformationKind::ShiftedNumber, 3);
  EXPECT_NEAR(s(0, 1).real(), 1.0, 1e-15);
  EXPECT_NEAR(s(1, 2).real(), 2.0 * std::sqrt(2.0), 1e-15);
  const OperatorMatrix n = deformed_lowering(DeformationKind::Number, d);
  for (int k = 1; k < d; ++k) EXPECT_NEAR(n(k - 1, k).real(), (k - 1) * std::sqrt(double(k)), 1e-14);
}

TEST(Quadratures, VacuumAndFirstExcited) {
  const auto q = quadrature_matrices(8);
  const FockVector vac = FockVector::basis(8, 0);
  EXPECT_NEAR(std::abs(expectation(q.position, vac)), 0.0, 1e-15);
  EXPECT_NEAR(expectation(q.position * q.position, vac).real(), 0.5, 1e-15);
  EXPECT_NEAR(expectation(q.momentum * q.momentum, FockVector::basis(8, 1)).real(), 1.5, 1e-14);
}

TEST(Quadratures, HermitianMatrices) {
  for (int d : {2, 5, 64}) {
    const auto q = quadrature_matrices(d);
    EXPECT_EQ(q.position, q.position.adjoint());
    EXPECT_EQ(q.momentum, q.momentum.adjoint());
    const OperatorMatrix h = susy_hamiltonian(1.3, d);
    EXPECT_EQ(h, h.adjoint());
  }
}

TEST(Oracle, LoweringZeroEigenvalueIsVacuum) {
  const auto r = oracle_eigenstate(ladder_matrices(12).lowering, 0.0, {0});
  EXPECT_LT(r.residual, 1e-14);
  EXPECT_NEAR((r.vectors[0] - FockVector::basis(12, 0).coefficients()).norm(), 0.0, 1e-14);
}

TEST(Oracle, LinearAndShiftedNumberCoherentCoefficients) {
  const Complex alpha(0.7, -0.4);
  const int d = 40;
  const auto lin = oracle_eigenstate(ladder_matrices(d).lowering, alpha, {0}, 1e-8);
  const auto nl = oracle_eigenstate(deformed_lowering(DeformationKind::ShiftedNumber, d), alpha, {0});
  Complex cl = 1.0, cn = 1.0;
  for (int n = 0; n < 15; ++n) {
    if (n > 0) {
      cl *= alpha / std::sqrt(double(n));
      cn *= alpha / (n * std::sqrt(double(n)));
    }
    EXPECT_NEAR(std::abs(lin.vectors[0](n) - cl), 0.0, 1e-12) << n;
    EXPECT_NEAR(std::abs(nl.vectors[0](n) - cn), 0.0, 1e-12) << n;
  }
}

TEST(Oracle, NoEigenvectorThrows) {
  // the raising matrix has no eigenvector for a nonzero eigenvalue
  EXPECT_THROW(oracle_eigenstate(ladder_matrices(10).raising, 0.5, {0}), NoEigenvectorError);
  EXPECT_THROW(oracle_eigenstate(ladder_matrices(10).raising, Complex(NAN, 0.0), {0}), DomainError);
  EXPECT_THROW(oracle_eigenstate(OperatorMatrix::Zero(3, 4), 0.0, {0}), DomainError);
}

TEST(Expectation, IdentityNumberAndHamiltonian) {
  const FockVector v(Vector::Random(9));
  EXPECT_NEAR(expectation(OperatorMatrix::Identity(9, 9), v).real(), 1.0, 1e-14);
  EXPECT_EQ(expectation(ladder_matrices(9).number, FockVector::basis(9, 0)), Complex(0.0));
  // lower |0> is the first excited level, energy omega
  const SpinorState psi1m{FockVector::zero(9), FockVector::basis(9, 0)};
  EXPECT_NEAR(expectation(susy_hamiltonian(1.0, 9), psi1m).real(), 1.0, 1e-15);
  EXPECT_THROW(expectation(OperatorMatrix::Identity(9, 9), FockVector::zero(9)), DomainError);
  EXPECT_THROW(expectation(OperatorMatrix::Identity(8, 8), v), DomainError);
}

TEST(FockProperty, TruncationTailAtDefaultDim) {
  for (auto kind : {DeformationKind::Linear, DeformationKind::ShiftedNumber, DeformationKind::Number}) {
    for (double r : {0.5, 1.5, 3.0, 4.0}) {
      const Complex a = std::polar(r, 1.1);
      const FockVector small = build_state({a, kind}, kDefaultDim).padded(2 * kDefaultDim);
      const FockVector big = build_state({a, kind}, 2 * kDefaultDim);
      EXPECT_GT(std::abs(inner(small, big)), 1.0 - 1e-12) << r;
    }
  }
}

TEST(FockProperty, OracleResidualReportedForRandomAmplitudes) {
  testing_support::Draws draws(3);
  for (int i = 0; i < 20; ++i) {
    const Complex a = draws.complex_in_disk(2.0);
    for (auto kind : {DeformationKind::Linear, DeformationKind::ShiftedNumber}) {
      const auto r = oracle_eigenstate(deformed_lowering(kind, 64), a, {0});
      EXPECT_LT(r.residual, kOracleResidualTolerance);
    }
    const auto r = oracle_eigenstate(deformed_lowering(DeformationKind::Number, 64), a, {1});
    EXPECT_LT(r.residual, kOracleResidualTolerance);
  }
}
