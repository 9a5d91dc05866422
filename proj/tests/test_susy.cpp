// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

#include "test_support.hpp"

#include <susy_ncs/susy.hpp>

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace susy;

namespace {
constexpr DeformationKind kKinds[] = {DeformationKind::Linear, DeformationKind::ShiftedNumber,
                                      DeformationKind::Number};
}

TEST(Hamiltonian, GroundAndFirstLevels) {
  const OperatorMatrix h = susy_hamiltonian(1.0, 6);
  const SpinorState g{FockVector::basis(6, 0), FockVector::zero(6)};
  const SpinorState up1{FockVector::basis(6, 1), FockVector::zero(6)};
  const SpinorState low1{FockVector::zero(6), FockVector::basis(6, 0)};
  EXPECT_EQ(expectation(h, g).real(), 0.0);
  EXPECT_EQ(expectation(h, up1).real(), 1.0);
  EXPECT_EQ(expectation(h, low1).real(), 1.0);
  EXPECT_THROW(susy_hamiltonian(0.0, 6), DomainError);
  EXPECT_THROW(susy_hamiltonian(1.0, 1), DomainError);
}

TEST(Hamiltonian, SpectrumDimThree) {
  const Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(susy_hamiltonian(1.0, 3));
  const double expected[] = {0, 1, 1, 2, 2, 3};
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(eig.eigenvalues()(i), expected[i], 1e-14);
}

TEST(Classify, Examples) {
  const KMatrix a = classify(1.0, 1.0, 0.0, 1.0);
  EXPECT_EQ(a.family, KFamily::Degenerate);
  EXPECT_EQ(a.kappa_plus, Complex(1.0));
  EXPECT_EQ(a.kappa_minus, Complex(1.0));
  EXPECT_EQ(classify(1.0, 0.0, 0.0, 1.0).family, KFamily::Degenerate);
  const KMatrix t = theta_family(std::numbers::pi / 4);
  EXPECT_EQ(t.family, KFamily::Generic);
  EXPECT_NEAR(std::abs(t.kappa_plus - (1.0 + 1.0 / std::sqrt(2.0))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.kappa_minus - (1.0 - 1.0 / std::sqrt(2.0))), 0.0, 1e-15);
  EXPECT_EQ(classify(1.0, 2.0, 0.5, 1.0).family, KFamily::Singular);
  EXPECT_EQ(classify(0.0, 0.0, 0.0, 0.0).family, KFamily::Singular);
  EXPECT_EQ(theta_family(std::numbers::pi / 2).family, KFamily::Degenerate);
  EXPECT_THROW(classify(NAN, 0.0, 0.0, 1.0), DomainError);
}

TEST(Classify, ThetaFamilyEigenvalues) {
  for (double th = 0.05; th < std::numbers::pi / 2; th += 0.1) {
    const KMatrix K = theta_family(th);
    const double s = std::sqrt(std::sin(2 * th) / 2);
    EXPECT_NEAR(std::abs(K.kappa_plus - (1 + s)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(K.kappa_minus - (1 - s)), 0.0, 1e-14);
  }
}

TEST(ClassifyProperty, TraceAndDeterminant) {
  testing_support::Draws draws(21);
  for (int i = 0; i < 500; ++i) {
    const KMatrix K = draws.any_k();
    EXPECT_NEAR(std::abs(K.kappa_plus + K.kappa_minus - K.trace()), 0.0, 1e-12);
    if (K.family != KFamily::Degenerate) {
      EXPECT_NEAR(std::abs(K.kappa_plus * K.kappa_minus - K.determinant()), 0.0, 1e-12);
    }
  }
}

TEST(ClassifyProperty, FamilyTagIsScaleInvariant) {
  testing_support::Draws draws(22);
  std::vector<KMatrix> samples;
  for (int i = 0; i < 200; ++i) samples.push_back(draws.any_k());
  for (int i = 0; i < 50; ++i) {
    const KMatrix& b = samples[i];
    samples.push_back(classify(b.k1, b.k2, -(b.k1 - b.k4) * (b.k1 - b.k4) / (4.0 * b.k2), b.k4));
    samples.push_back(classify(b.k1, b.k2, b.k1 * b.k4 / b.k2, b.k4));
  }
  int seen[3] = {0, 0, 0};
  for (const KMatrix& K : samples) {
    ++seen[static_cast<int>(K.family)];
    for (Complex c : {Complex(2.0), Complex(0.0, 1.0)}) {
      EXPECT_EQ(classify(c * K.k1, c * K.k2, c * K.k3, c * K.k4).family, K.family);
    }
  }
  for (int n : seen) EXPECT_GT(n, 0);
}

TEST(Sao, LinearAragoneCase) {
  const int d = 6;
  const OperatorMatrix m = sao_matrix(classify(1.0, 1.0, 0.0, 1.0), DeformationKind::Linear, d);
  const OperatorMatrix a = ladder_matrices(d).lowering;
  EXPECT_EQ(m.topLeftCorner(d, d), a);
  EXPECT_EQ(m.topRightCorner(d, d), OperatorMatrix::Identity(d, d));
  EXPECT_EQ(m.bottomLeftCorner(d, d), OperatorMatrix::Zero(d, d));
  EXPECT_EQ(m.bottomRightCorner(d, d), a);
  EXPECT_THROW(sao_matrix(classify(1.0, 1.0, 0.0, 1.0), DeformationKind::Linear, 2), DomainError);
}

TEST(Sao, NumberKindAnnihilatesUpperOne) {
  const int d = 8;
  const OperatorMatrix m = sao_matrix(classify(1.0, 0.0, 0.0, 1.0), DeformationKind::Number, d);
  const SpinorState s{FockVector::basis(d, 1), FockVector::zero(d)};
  EXPECT_EQ((m * s.stacked()).norm(), 0.0);
}

TEST(SaoProperty, CommutatorWithHamiltonian) {
  SeededDraws draws(31);
  for (double omega : {1.0, 2.5}) {
    for (int d : {16, 64}) {
      const OperatorMatrix h = susy_hamiltonian(omega, d);
      for (int i = 0; i < 20; ++i) {
        const KMatrix K = draws.generic_k();
        for (auto kind : kKinds) {
          EXPECT_LT(commutator_defect(h, sao_matrix(K, kind, d), omega, d), 1e-10);
        }
      }
    }
  }
}

TEST(SaoProperty, CommutatorDefectDetectsAWrongOperator) {
  const int d = 16;
  // the raising-type block breaks [H, A] = -omega A
  OperatorMatrix bad = sao_matrix(theta_family(0.3), DeformationKind::Linear, d);
  bad.topLeftCorner(d, d) += ladder_matrices(d).raising;
  EXPECT_GT(commutator_defect(susy_hamiltonian(1.0, d), bad, 1.0, d), 0.1);
}

TEST(SpinorState, StackingRoundTripAndNorms) {
  const SpinorState s{FockVector(Vector::Random(5)), FockVector(Vector::Random(5))};
  const SpinorState t = SpinorState::from_stacked(s.stacked());
  EXPECT_EQ((t - s).norm(), 0.0);
  EXPECT_TRUE(s.normalized().is_normalized());
  EXPECT_NEAR(ray_distance(s, s.scaled(std::polar(3.0, 1.2))), 0.0, 1e-7);
  EXPECT_THROW(SpinorState(FockVector::zero(4), FockVector::zero(5)), DomainError);
  EXPECT_THROW(SpinorState::zero(4).normalized(), DomainError);
}
