// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file validate.hpp
 * @brief Self-check suite: oracle equivalences, eigen-residuals,
 *        commutators, limits and bounds, with K matrices drawn from a seed.
 *
 * Every check catches its own exceptions and reports them as a failure, so a
 * tiny truncation produces a readable table instead of a crash.
 */

#pragma once

#include <susy_ncs/coherent.hpp>
#include <susy_ncs/fock.hpp>
#include <susy_ncs/geomphase.hpp>
#include <susy_ncs/hypergeom.hpp>
#include <susy_ncs/nlscs.hpp>
#include <susy_ncs/susy.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace susy {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Deterministic draws from mt19937_64; the mapping to doubles is spelled
/// out so reports do not depend on the standard library's distributions.
class SeededDraws {
 public:
  explicit SeededDraws(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  Complex complex_in_disk(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
  }

  /// Generic K with both eigenvalues between 0.3 and 3 in modulus, so that
  /// phi = eigenvalue / kappa stays small for |eigenvalue| <= 1.
  KMatrix generic_k() {
    for (;;) {
      const auto c = [&] { return Complex(uniform(-1.5, 1.5), uniform(-1.5, 1.5)); };
      const KMatrix K = classify(c(), c(), c(), c());
      if (!well_conditioned(K)) continue;
      return K;
    }
  }

 private:
  static bool well_conditioned(const KMatrix& K) {
    if (K.family != KFamily::Generic) return false;
    const double a = std::abs(K.kappa_plus);
    const double b = std::abs(K.kappa_minus);
    return std::min(a, b) > 0.3 && std::max(a, b) < 3.0 && std::abs(K.k1) > 0.1 &&
           std::abs(K.kappa_plus - K.kappa_minus) > 0.1;
  }

  std::mt19937_64 engine_;
};

namespace detail {

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

/// Runs `body`, which returns the worst observed error, against `bound`.
inline CheckResult run_check(const std::string& name, double bound,
                             const std::function<double()>& body) {
  CheckResult r{name, false, {}};
  try {
    const double worst = body();
    r.passed = worst < bound;
    r.detail = "worst " + sci(worst) + (r.passed ? " < " : " >= ") + sci(bound);
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

inline constexpr DeformationKind kAllKinds[] = {DeformationKind::Linear,
                                                DeformationKind::ShiftedNumber,
                                                DeformationKind::Number};

}  // namespace detail

inline std::vector<CheckResult> run_validation(int dim = kDefaultDim, std::uint64_t seed = 1) {
  using detail::kAllKinds;
  using detail::run_check;
  const double pi = std::numbers::pi;
  std::vector<CheckResult> out;

  out.push_back(run_check("hypergeom: 0F2(1,1;1) vs direct sum", 1e-14, [] {
    long double sum = 0.0L, term = 1.0L;
    for (int n = 0; n < 200; ++n) {
      sum += term;
      term /= static_cast<long double>(n + 1) * (n + 1) * (n + 1);
    }
    return std::abs(hyp0f2(1.0, 1.0, 1.0) - static_cast<double>(sum));
  }));

  // Tail test: the state at dim and at 2 dim must coincide.
  out.push_back(run_check("truncation tail: coherent families, |alpha| <= 3", 1e-12, [&] {
    double worst = 0.0;
    for (auto kind : kAllKinds) {
      for (double r : {1.0, 2.0, 3.0}) {
        const Complex a = std::polar(r, 0.3);
        const FockVector small = build_state({a, kind}, dim).padded(2 * dim);
        const FockVector big = build_state({a, kind}, 2 * dim);
        worst = std::max(worst, 1.0 - std::abs(inner(small, big)));
      }
    }
    return worst;
  }));

  out.push_back(run_check("scalar moments: closed form vs oracle, 5x5 grid", 1e-8, [&] {
    double worst = 0.0;
    for (auto kind : kAllKinds) {
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
          const CoherentLabel label{Complex(-1.5 + 0.75 * i, -1.5 + 0.75 * j), kind};
          const auto c = closed_form_moments(label);
          const auto o = oracle_moments(build_state(label, dim));
          worst = std::max({worst, std::abs(c.var_x - o.var_x), std::abs(c.var_p - o.var_p),
                            std::abs(c.mean_x - o.mean_x), std::abs(c.mean_p - o.mean_p)});
        }
      }
    }
    return worst;
  }));

  SeededDraws draws(seed);
  std::vector<KMatrix> ks;
  for (int i = 0; i < 20; ++i) ks.push_back(draws.generic_k());
  std::vector<Complex> ys;
  for (int i = 0; i < 20; ++i) ys.push_back(draws.complex_in_disk(1.0));

  out.push_back(run_check("standard coherent product = 1/2", 1e-10, [&] {
    double worst = 0.0;
    for (const Complex& y : ys) {
      const auto r = closed_form_moments({3.0 * y, DeformationKind::Linear});
      worst = std::max(worst, std::abs(r.product - 0.5));
    }
    return worst;
  }));

  out.push_back(run_check("commutator [H, A] = -omega A (relative), 20 random K", 1e-10, [&] {
    double worst = 0.0;
    const OperatorMatrix h = susy_hamiltonian(1.0, dim);
    for (auto kind : kAllKinds) {
      for (const auto& K : ks) worst = std::max(worst, commutator_defect(h, sao_matrix(K, kind, dim), 1.0, dim));
    }
    return worst;
  }));

  out.push_back(run_check("eigen-residual: generic states, 20 random K", 1e-8, [&] {
    double worst = 0.0;
    for (auto kind : kAllKinds) {
      for (std::size_t i = 0; i < ks.size(); ++i) {
        const SuperCoherentSpec spec{ks[i], kind, ys[i], dim};
        const auto pair = build_generic(spec);
        const auto mixed = build_A_C_basis(spec, Complex(0.6, -0.2), Complex(-0.3, 0.8));
        for (const SpinorState* s : {&pair.plus, &pair.minus, &mixed}) {
          worst = std::max(worst, eigen_residual(*s, ks[i], kind, ys[i]));
        }
      }
    }
    return worst;
  }));

  out.push_back(run_check("eigen-residual: degenerate and singular K", 1e-6, [&] {
    double worst = 0.0;
    for (auto kind : kAllKinds) {
      for (std::size_t i = 0; i < 5; ++i) {
        // (k1, k2, -(k1 - k4)^2 / (4 k2), k4) has a double eigenvalue
        const Complex k1 = ks[i].k1, k2 = ks[i].k2, k4 = ks[i].k4;
        const KMatrix deg = classify(k1, k2, -(k1 - k4) * (k1 - k4) / (4.0 * k2), k4);
        const SuperCoherentSpec d{deg, kind, 0.5 * ys[i], dim};
        worst = std::max(worst, eigen_residual(build_eigenstate(d, 1.0, Complex(0.4, 0.3)), deg,
                                               kind, d.eigenvalue));
        const KMatrix sing = classify(k1, k2, k1 * k4 / k2, k4);
        const SuperCoherentSpec s{sing, kind, ys[i], dim};
        worst = std::max(worst, eigen_residual(build_singular(s), sing, kind, s.eigenvalue));
      }
    }
    return worst;
  }));

  out.push_back(run_check("spinor moments: closed form vs oracle", 1e-7, [&] {
    double worst = 0.0;
    for (auto kind : {DeformationKind::ShiftedNumber, DeformationKind::Number}) {
      for (double theta : {pi / 4, 3 * pi / 4}) {
        for (double r : {0.0, 0.5, 1.0, 1.5, 2.0}) {
          const SuperCoherentSpec spec{theta_family(theta), kind, std::polar(r, 0.4), dim};
          const SuperpositionParams p{pi / 4, pi / 4};
          const auto c = closed_form_spinor_moments(spec, p);
          const auto o = oracle_moments(build_superposition(spec, p));
          worst = std::max({worst, std::abs(c.var_x - o.var_x), std::abs(c.var_p - o.var_p)});
        }
      }
    }
    return worst;
  }));

  out.push_back(run_check("geometric phase: closed form vs oracle", 1e-7, [&] {
    double worst = 0.0;
    for (auto kind : {DeformationKind::ShiftedNumber, DeformationKind::Number}) {
      for (double theta : {pi / 4, 3 * pi / 4}) {
        for (double r : {0.0, 0.5, 1.0, 1.5, 2.0}) {
          const SuperCoherentSpec spec{theta_family(theta), kind, std::polar(r, -0.7), dim};
          const SuperpositionParams p{pi / 4, pi / 4};
          const double c = kind == DeformationKind::ShiftedNumber ? beta_nl(spec, p).beta
                                                                  : beta_NL(spec, p).beta;
          worst = std::max(worst, std::abs(c - geometric_phase_oracle(build_superposition(spec, p)).beta));
        }
      }
    }
    return worst;
  }));

  out.push_back(run_check("limits: product 1/2, 3/2; spinor 1/4, 9/4; beta 0, 2 pi", 1e-8, [&] {
    const SuperpositionParams p{pi / 4, pi / 4};
    const KMatrix K = theta_family(pi / 4);
    const SuperCoherentSpec nl{K, DeformationKind::ShiftedNumber, 0.0, dim};
    const SuperCoherentSpec NL{K, DeformationKind::Number, 0.0, dim};
    return std::max(
        {std::abs(closed_form_moments({0.0, DeformationKind::ShiftedNumber}).product - 0.5),
         std::abs(closed_form_moments({0.0, DeformationKind::Number}).product - 1.5),
         std::abs(closed_form_spinor_moments(nl, p).product_squared() - 0.25),
         std::abs(closed_form_spinor_moments(NL, p).product_squared() - 2.25),
         std::abs(beta_nl(nl, p).beta), std::abs(beta_NL(NL, p).beta - 2.0 * pi)});
  }));

  out.push_back(run_check("Heisenberg bound on random supercoherent states", 1e-10, [&] {
    double worst = 0.0;
    for (auto kind : kAllKinds) {
      for (std::size_t i = 0; i < ks.size(); ++i) {
        const SuperCoherentSpec spec{ks[i], kind, ys[i], dim};
        const auto r = oracle_moments(build_superposition(spec, {0.3 * i, 0.2 * i}));
        worst = std::max(worst, 0.5 - r.product);
      }
    }
    return worst;
  }));

  out.push_back(run_check("evolution loop U(2 pi / omega) = I", 1e-12, [&] {
    return std::max(evolution_loop_check(1.0, dim), evolution_loop_check(2.0, dim));
  }));

  return out;
}

}  // namespace susy
