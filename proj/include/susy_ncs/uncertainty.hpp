// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <string>

namespace susy {

/// Variances below -kVarianceClampWarn are not rounding noise and are flagged.
inline constexpr double kVarianceClampWarn = 1e-10;

/// Quadrature moments in units hbar = m = omega = 1.
struct UncertaintyReport {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double mean_x2 = 0.0;
  double mean_p2 = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  double product = 0.0;   // sqrt(var_x * var_p)
  std::string warning;    // set when a variance had to be clamped

  double product_squared() const { return var_x * var_p; }

  /// Fills the report from explicitly given variances; negative rounding
  /// residue is clamped to zero.
  static UncertaintyReport from_variances(double mean_x, double mean_p, double mean_x2,
                                          double mean_p2, double var_x, double var_p) {
    UncertaintyReport r;
    r.mean_x = mean_x;
    r.mean_p = mean_p;
    r.mean_x2 = mean_x2;
    r.mean_p2 = mean_p2;
    r.var_x = clamp(var_x, "var_x", r.warning);
    r.var_p = clamp(var_p, "var_p", r.warning);
    r.product = std::sqrt(r.var_x * r.var_p);
    return r;
  }

  static UncertaintyReport from_moments(double mean_x, double mean_p, double mean_x2,
                                        double mean_p2) {
    return from_variances(mean_x, mean_p, mean_x2, mean_p2, mean_x2 - mean_x * mean_x,
                          mean_p2 - mean_p * mean_p);
  }

 private:
  static double clamp(double v, const char* name, std::string& warning) {
    if (v >= 0.0) return v;
    if (v < -kVarianceClampWarn) {
      if (!warning.empty()) warning += "; ";
      warning += std::string(name) + " = " + std::to_string(v) + " clamped to 0";
    }
    return 0.0;
  }
};

}  // namespace susy
