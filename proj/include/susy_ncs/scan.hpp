// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scan.hpp
 * @brief Parameter-grid scans of uncertainty products and geometric phases.
 *
 * A scan is the Cartesian product theta x Re(eigenvalue) x Im(eigenvalue).
 * Rows are evaluated independently (optionally on several threads) and kept
 * in grid order, so the resulting table does not depend on the thread count.
 * A row whose construction throws keeps its coordinates, gets NaN values and
 * carries the exception message instead of aborting the scan.
 */

#pragma once

#include <susy_ncs/coherent.hpp>
#include <susy_ncs/errors.hpp>
#include <susy_ncs/fock.hpp>
#include <susy_ncs/geomphase.hpp>
#include <susy_ncs/nlscs.hpp>
#include <susy_ncs/susy.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace susy {

struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;

  /// Grid points min, min + step, ..., up to max (inclusive within step/1e6).
  std::vector<double> points() const {
    if (!(step > 0.0)) throw DomainError("range step must be positive");
    if (!(min <= max)) throw DomainError("range is empty (min > max)");
    std::vector<double> out;
    const auto count = static_cast<long>(std::floor((max - min) / step + 1e-6));
    for (long i = 0; i <= count; ++i) out.push_back(min + static_cast<double>(i) * step);
    return out;
  }
};

enum class ScanMode { Scalar, Spinor };
enum class ScanQuantity { Uncertainty, GeometricPhase };

struct KOverride {
  Complex k1, k2, k3, k4;
};

struct ScanConfig {
  ScanQuantity quantity = ScanQuantity::Uncertainty;
  DeformationKind kind = DeformationKind::ShiftedNumber;
  ScanMode mode = ScanMode::Scalar;
  AxisRange theta{std::numbers::pi / 4, std::numbers::pi / 4, 1.0};
  AxisRange re{0.0, 0.0, 1.0};
  AxisRange im{0.0, 0.0, 1.0};
  double eta = std::numbers::pi / 4;
  double lambda = std::numbers::pi / 4;
  double omega = 1.0;
  int dim = kDefaultDim;
  double tolerance = kDefaultClassifyTolerance;
  bool oracle_check = false;
  int threads = 1;
  std::optional<KOverride> k_override;

  void validate() const {
    if (dim < 8) throw DomainError("dim must be at least 8, got " + std::to_string(dim));
    if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
    if (!(omega > 0.0)) throw DomainError("omega must be positive");
    if (threads < 1) throw DomainError("threads must be at least 1");
    re.points();
    im.points();
    if (mode == ScanMode::Spinor) theta.points();
    if (quantity == ScanQuantity::GeometricPhase && mode == ScanMode::Scalar) {
      throw DomainError("geometric phases are defined for spinor states only");
    }
  }

  KMatrix k_at(double theta_value) const {
    if (k_override) {
      return classify(k_override->k1, k_override->k2, k_override->k3, k_override->k4, tolerance);
    }
    return theta_family(theta_value, tolerance);
  }
};

struct ScanRow {
  std::vector<double> values;  // one per column; NaN when unavailable
  std::string error;
};

struct ScanTable {
  std::vector<std::string> columns;
  std::vector<ScanRow> rows;
};

/// True when the generic +- formulas can be used without cancellation.
inline bool well_separated(const KMatrix& K) {
  return K.family == KFamily::Generic &&
         std::abs(K.kappa_plus - K.kappa_minus) >=
             kDegenerateSwitch * (std::abs(K.kappa_plus) + std::abs(K.kappa_minus));
}

/**
 * The state a spinor scan row describes: the (eta, lambda) superposition of
 * |Y+> and |Y-> for generic K; for degenerate K the (cos eta, e^{i lambda}
 * sin eta) combination of the two degenerate branches; for singular K the
 * single singular state.
 */
inline SpinorState scan_state(const SuperCoherentSpec& spec, const SuperpositionParams& params) {
  if (well_separated(spec.K)) return build_superposition(spec, params);
  return build_eigenstate(spec, std::cos(params.eta), std::polar(std::sin(params.eta), params.lambda));
}

namespace detail {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline bool has_closed_form(const ScanConfig& cfg, const KMatrix& K) {
  return cfg.kind != DeformationKind::Linear && well_separated(K);
}

struct GridPoint {
  double theta;
  Complex eigenvalue;
};

inline std::vector<GridPoint> grid(const ScanConfig& cfg) {
  std::vector<double> thetas{cfg.theta.min};
  if (cfg.mode == ScanMode::Spinor) thetas = cfg.theta.points();
  std::vector<GridPoint> out;
  for (double t : thetas) {
    for (double r : cfg.re.points()) {
      for (double i : cfg.im.points()) out.push_back({t, Complex(r, i)});
    }
  }
  return out;
}

inline std::vector<std::string> columns(const ScanConfig& cfg) {
  std::vector<std::string> cols;
  if (cfg.mode == ScanMode::Spinor) cols.push_back("theta");
  cols.insert(cols.end(), {"re", "im"});
  if (cfg.quantity == ScanQuantity::Uncertainty) {
    cols.insert(cols.end(), {"var_x", "var_p"});
    cols.push_back(cfg.mode == ScanMode::Scalar ? "product" : "product_squared");
  } else {
    cols.insert(cols.end(), {"beta", "mean_energy"});
  }
  if (cfg.oracle_check) cols.insert(cols.end(), {"oracle", "oracle_diff"});
  return cols;
}

inline double headline(const ScanConfig& cfg, const UncertaintyReport& r) {
  return cfg.mode == ScanMode::Scalar ? r.product : r.product_squared();
}

inline void evaluate_row(const ScanConfig& cfg, const GridPoint& pt, ScanRow& row) {
  const std::size_t keys = cfg.mode == ScanMode::Spinor ? 3 : 2;
  const std::size_t width = columns(cfg).size();
  row.values.assign(width, kNaN);
  std::size_t c = 0;
  if (cfg.mode == ScanMode::Spinor) row.values[c++] = pt.theta;
  row.values[c++] = pt.eigenvalue.real();
  row.values[c++] = pt.eigenvalue.imag();
  const auto put = [&](std::size_t offset, double v) { row.values[keys + offset] = v; };

  if (cfg.mode == ScanMode::Scalar) {
    const CoherentLabel label{pt.eigenvalue, cfg.kind};
    const UncertaintyReport r = closed_form_moments(label);
    put(0, r.var_x);
    put(1, r.var_p);
    put(2, headline(cfg, r));
    if (!r.warning.empty()) row.error = r.warning;
    if (cfg.oracle_check) {
      const double o = headline(cfg, oracle_moments(build_state(label, cfg.dim)));
      put(3, o);
      put(4, std::abs(o - r.product));
    }
    return;
  }

  const SuperCoherentSpec spec{cfg.k_at(pt.theta), cfg.kind, pt.eigenvalue, cfg.dim};
  const SuperpositionParams params{cfg.eta, cfg.lambda};
  const bool closed = has_closed_form(cfg, spec.K);

  if (cfg.quantity == ScanQuantity::Uncertainty) {
    std::optional<UncertaintyReport> oracle;
    if (!closed || cfg.oracle_check) oracle = oracle_moments(scan_state(spec, params));
    const UncertaintyReport r = closed ? closed_form_spinor_moments(spec, params) : *oracle;
    put(0, r.var_x);
    put(1, r.var_p);
    put(2, headline(cfg, r));
    if (!r.warning.empty()) row.error = r.warning;
    if (cfg.oracle_check) {
      put(3, headline(cfg, *oracle));
      put(4, std::abs(headline(cfg, *oracle) - headline(cfg, r)));
    }
    return;
  }

  std::optional<GeometricPhaseResult> oracle;
  if (!closed || cfg.oracle_check) oracle = geometric_phase_oracle(scan_state(spec, params), cfg.omega);
  GeometricPhaseResult g;
  if (!closed) {
    g = *oracle;
  } else if (cfg.kind == DeformationKind::ShiftedNumber) {
    g = beta_nl(spec, params, cfg.omega);
  } else {
    g = beta_NL(spec, params, cfg.omega);
  }
  put(0, g.beta);
  put(1, g.mean_energy);
  if (cfg.oracle_check) {
    put(2, oracle->beta);
    put(3, std::abs(oracle->beta - g.beta));
  }
}

}  // namespace detail

/// Evaluates the whole grid; `cfg.threads` workers pull rows from a shared
/// counter and write into preallocated slots.
inline ScanTable run_scan(const ScanConfig& cfg) {
  cfg.validate();
  const auto points = detail::grid(cfg);
  ScanTable table{detail::columns(cfg), std::vector<ScanRow>(points.size())};

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        detail::evaluate_row(cfg, points[i], table.rows[i]);
      } catch (const std::exception& e) {
        table.rows[i].error = e.what();
      }
    }
  };
  const int n = std::max(1, std::min<int>(cfg.threads, static_cast<int>(points.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return table;
}

}  // namespace susy
