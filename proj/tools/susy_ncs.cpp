// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

// susy_ncs: uncertainty and geometric-phase scans, state dumps and the
// self-check suite.
//
// Exit codes: 0 ok, 1 validation failure, 2 bad arguments, 3 I/O error.

#include "output.hpp"

#include <susy_ncs/susy_ncs.hpp>
#include <susy_ncs/scan.hpp>
#include <susy_ncs/validate.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace {

using namespace susy;
using susy::cli::Format;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, DeformationKind> kKinds{{"linear", DeformationKind::Linear},
                                                    {"nl", DeformationKind::ShiftedNumber},
                                                    {"NL", DeformationKind::Number}};

// "re" or "re,im"
Complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw UsageError("cannot parse complex value '" + text + "'");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw UsageError("cannot parse complex value '" + text + "'");
  }
  return {re, im};
}

int default_dim() {
  const char* env = std::getenv("SUSY_NCS_DIM");
  if (env == nullptr || *env == '\0') return kDefaultDim;
  try {
    std::size_t used = 0;
    const int d = std::stoi(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing text");
    return d;
  } catch (const std::exception&) {
    throw UsageError(std::string("SUSY_NCS_DIM is not an integer: ") + env);
  }
}

// Shared options of the scan-like subcommands.
struct Options {
  std::string kind = "nl";
  std::string mode = "scalar";
  double theta = std::numbers::pi / 4;
  double theta_min = 0.0, theta_max = 0.0, theta_step = 0.05;
  double eta = std::numbers::pi / 4;
  double lambda = std::numbers::pi / 4;
  double omega = 1.0;
  double re_min = 0.0, re_max = 0.0, re_step = 0.1;
  double im_min = 0.0, im_max = 0.0, im_step = 0.1;
  double re = 0.0, im = 0.0;
  int dim = kDefaultDim;
  double tol = kDefaultClassifyTolerance;
  std::string out;
  std::string format = "csv";
  bool oracle_check = false;
  std::string preset;
  int threads = 1;
  std::string k1, k2, k3, k4;
  std::uint64_t seed = 1;
};

void add_physics_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--kind", o.kind, "Deformation: linear, nl (f = N+1), NL (f = N)")
      ->check(CLI::IsMember({"linear", "nl", "NL"}));
  cmd.add_option("--mode", o.mode, "scalar coherent states or spinor supercoherent states")
      ->check(CLI::IsMember({"scalar", "spinor"}));
  cmd.add_option("--theta", o.theta, "K = (1, cos theta, sin theta, 1)");
  cmd.add_option("--eta", o.eta, "Superposition angle");
  cmd.add_option("--lambda", o.lambda, "Superposition relative phase");
  cmd.add_option("--omega", o.omega, "Oscillator frequency")->check(CLI::PositiveNumber);
  cmd.add_option("--dim", o.dim, "Fock truncation per component (env SUSY_NCS_DIM)");
  cmd.add_option("--tol", o.tol, "K classification tolerance")->check(CLI::PositiveNumber);
  for (auto [name, target] : {std::pair{"--k1", &o.k1}, std::pair{"--k2", &o.k2},
                              std::pair{"--k3", &o.k3}, std::pair{"--k4", &o.k4}}) {
    cmd.add_option(name, *target, "Explicit K entry, 're' or 're,im' (all four required)");
  }
}

void add_grid_options(CLI::App& cmd, Options& o) {
  auto* tmin = cmd.add_option("--theta-min", o.theta_min, "Theta sweep start");
  auto* tmax = cmd.add_option("--theta-max", o.theta_max, "Theta sweep end");
  cmd.add_option("--theta-step", o.theta_step, "Theta sweep step");
  tmin->needs(tmax);
  tmax->needs(tmin);
  cmd.add_option("--re-min", o.re_min, "Re(eigenvalue) start");
  cmd.add_option("--re-max", o.re_max, "Re(eigenvalue) end");
  cmd.add_option("--re-step", o.re_step, "Re(eigenvalue) step");
  cmd.add_option("--im-min", o.im_min, "Im(eigenvalue) start");
  cmd.add_option("--im-max", o.im_max, "Im(eigenvalue) end");
  cmd.add_option("--im-step", o.im_step, "Im(eigenvalue) step");
  cmd.add_option("--out", o.out, "Output file (default stdout)");
  cmd.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_flag("--oracle-check", o.oracle_check, "Add truncated-matrix cross-check columns");
  cmd.add_option("--preset", o.preset, "Figure preset fig1..fig7")
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7"}))
      ->description("Figure preset fig1..fig7; pins kind, mode, theta, grid, eta and lambda");
  cmd.add_option("--threads", o.threads, "Worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);
}

std::optional<KOverride> k_override(const Options& o) {
  const int given = !o.k1.empty() + !o.k2.empty() + !o.k3.empty() + !o.k4.empty();
  if (given == 0) return std::nullopt;
  if (given != 4) throw UsageError("--k1..--k4 must be given together");
  return KOverride{parse_complex(o.k1), parse_complex(o.k2), parse_complex(o.k3),
                   parse_complex(o.k4)};
}

struct Preset {
  ScanConfig config;
  std::string description;
};

// Eigenvalue axes are not given numerically for the figures; [0, 3] is used.
Preset make_preset(const std::string& name, ScanConfig base) {
  const double pi = std::numbers::pi;
  ScanConfig c = base;
  c.eta = c.lambda = pi / 4;
  c.k_override.reset();
  c.re = {0.0, 3.0, 0.1};
  c.im = {0.0, 3.0, 0.1};
  std::string what;
  if (name == "fig1" || name == "fig2") {
    c.quantity = ScanQuantity::Uncertainty;
    c.mode = ScanMode::Scalar;
    c.kind = name == "fig1" ? DeformationKind::ShiftedNumber : DeformationKind::Number;
    what = "scalar product over Re, Im in [0, 3] step 0.1";
  } else if (name == "fig3" || name == "fig4" || name == "fig5") {
    c.quantity = ScanQuantity::Uncertainty;
    c.mode = ScanMode::Spinor;
    c.kind = name == "fig3"   ? DeformationKind::Linear
             : name == "fig4" ? DeformationKind::ShiftedNumber
                              : DeformationKind::Number;
    c.theta = {0.01, pi - 0.01, 0.05};
    c.im = {0.0, 0.0, 1.0};
    if (c.kind == DeformationKind::Linear) c.dim = std::max(c.dim, 256);
    what = "spinor product_squared over theta in [0.01, pi - 0.01] step 0.05, real eigenvalue "
           "in [0, 3] step 0.1, eta = lambda = pi/4";
  } else {
    c.quantity = ScanQuantity::GeometricPhase;
    c.mode = ScanMode::Spinor;
    c.kind = name == "fig6" ? DeformationKind::ShiftedNumber : DeformationKind::Number;
    c.theta = {pi / 4, 3 * pi / 4, pi / 2};
    what = "beta for theta in {pi/4, 3pi/4}, Re, Im in [0, 3] step 0.1, eta = lambda = pi/4";
  }
  return {c, name + ": " + what + " (axis ranges approximate the plotted windows)"};
}

ScanConfig config_from(const Options& o, const CLI::App& cmd, ScanQuantity quantity) {
  ScanConfig c;
  c.quantity = quantity;
  c.kind = kKinds.at(o.kind);
  c.mode = o.mode == "spinor" ? ScanMode::Spinor : ScanMode::Scalar;
  if (quantity == ScanQuantity::GeometricPhase) c.mode = ScanMode::Spinor;
  if (cmd.count("--theta-min") > 0) {
    c.theta = {o.theta_min, o.theta_max, o.theta_step};
  } else {
    c.theta = {o.theta, o.theta, 1.0};
  }
  // a missing max collapses the axis to the single point min
  c.re = {o.re_min, cmd.count("--re-max") > 0 ? o.re_max : o.re_min, o.re_step};
  c.im = {o.im_min, cmd.count("--im-max") > 0 ? o.im_max : o.im_min, o.im_step};
  c.eta = o.eta;
  c.lambda = o.lambda;
  c.omega = o.omega;
  c.dim = o.dim;
  c.tolerance = o.tol;
  c.oracle_check = o.oracle_check;
  c.threads = o.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : o.threads;
  c.k_override = k_override(o);
  return c;
}

class Sink {
 public:
  explicit Sink(const std::string& path) : path_(path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  void close() {
    if (path_.empty()) {
      std::cout.flush();
      return;
    }
    file_.close();
    if (!file_) throw IoError("failed writing " + path_);
  }

 private:
  std::string path_;
  std::ofstream file_;
};

void write_metadata(const Options& o, const std::string& description) {
  if (o.out.empty()) {
    std::cerr << "# preset " << description << '\n';
    return;
  }
  nlohmann::ordered_json meta{{"preset", o.preset}, {"description", description}};
  std::ofstream f(o.out + ".meta", std::ios::binary);
  f << meta.dump(2) << '\n';
  if (!f) throw IoError("cannot write " + o.out + ".meta");
}

int run_scan_command(const Options& o, const CLI::App& cmd, ScanQuantity quantity) {
  ScanConfig cfg = config_from(o, cmd, quantity);
  std::string description;
  if (!o.preset.empty()) {
    Preset p = make_preset(o.preset, cfg);
    if (p.config.quantity != quantity) {
      throw UsageError("preset " + o.preset + " belongs to the other subcommand");
    }
    cfg = p.config;
    description = p.description;
  }
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const ScanTable table = run_scan(cfg);
  Sink sink(o.out);
  cli::write_table(sink.stream(), table, o.format == "json" ? Format::Json : Format::Csv);
  sink.close();
  if (!description.empty()) write_metadata(o, description);
  return kExitOk;
}

int run_state_command(const Options& o) {
  const Complex y(o.re, o.im);
  const DeformationKind kind = kKinds.at(o.kind);
  if (o.dim < 2) throw UsageError("dim must be at least 2");
  ScanTable table;
  if (o.mode == "scalar") {
    table.columns = {"n", "re", "im"};
    const FockVector v = build_state({y, kind}, o.dim);
    for (int n = 0; n < v.dim(); ++n) table.rows.push_back({{double(n), v[n].real(), v[n].imag()}, {}});
  } else {
    ScanConfig c;
    c.tolerance = o.tol;
    c.k_override = k_override(o);
    const SuperCoherentSpec spec{c.k_at(o.theta), kind, y, o.dim};
    const SpinorState s = scan_state(spec, {o.eta, o.lambda}).normalized();
    table.columns = {"n", "upper_re", "upper_im", "lower_re", "lower_im"};
    for (int n = 0; n < s.dim(); ++n) {
      table.rows.push_back(
          {{double(n), s.upper[n].real(), s.upper[n].imag(), s.lower[n].real(), s.lower[n].imag()},
           {}});
    }
  }
  Sink sink(o.out);
  cli::write_table(sink.stream(), table, o.format == "json" ? Format::Json : Format::Csv);
  sink.close();
  return kExitOk;
}

int run_validate_command(const Options& o) {
  if (o.dim < 3) throw UsageError("dim must be at least 3");
  const auto results = run_validation(o.dim, o.seed);
  bool ok = true;
  std::ostringstream report;
  report << "susy_ncs validate dim=" << o.dim << " seed=" << o.seed << '\n';
  for (const auto& r : results) {
    report << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
    ok = ok && r.passed;
  }
  report << (ok ? "all checks passed\n" : "some checks FAILED\n");
  Sink sink(o.out);
  sink.stream() << report.str();
  sink.close();
  return ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supercoherent-state uncertainty and geometric-phase calculator"};
  app.require_subcommand(1);
  Options o;
  try {
    o.dim = default_dim();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto* unc = app.add_subcommand("uncertainty", "Uncertainty products over an eigenvalue grid");
  add_physics_options(*unc, o);
  add_grid_options(*unc, o);

  auto* geo = app.add_subcommand("geomphase", "Geometric phase over an eigenvalue grid");
  add_physics_options(*geo, o);
  add_grid_options(*geo, o);

  auto* st = app.add_subcommand("state", "Dump the Fock coefficients of one state");
  add_physics_options(*st, o);
  st->add_option("--re", o.re, "Re(eigenvalue)");
  st->add_option("--im", o.im, "Im(eigenvalue)");
  st->add_option("--out", o.out, "Output file (default stdout)");
  st->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* val = app.add_subcommand("validate", "Run the self-check suite");
  val->add_option("--dim", o.dim, "Fock truncation per component (env SUSY_NCS_DIM)");
  val->add_option("--seed", o.seed, "Seed for the random K draws");
  val->add_option("--out", o.out, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*unc) return run_scan_command(o, *unc, ScanQuantity::Uncertainty);
    if (*geo) return run_scan_command(o, *geo, ScanQuantity::GeometricPhase);
    if (*st) return run_state_command(o);
    if (*val) return run_validate_command(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
