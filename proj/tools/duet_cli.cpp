// Command-line front end: steady states, entanglement scans, and the
// self-consistency suite for the driven two-atom model.

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "duet/duet.hpp"

namespace {

using nlohmann::json;

struct CommonOptions {
  duet::SystemParams params;
  double gamma12_override = 0.0;
  bool has_override = false;
  int threads = 1;
  duet::Tolerances tol;
};

void add_common_options(CLI::App& app, CommonOptions& opt) {
  app.add_option("--gamma1", opt.params.gamma1,
                 "decay rate of the undriven atom (rate unit)")
      ->capture_default_str();
  app.add_option("--gamma2", opt.params.gamma2, "decay rate of the driven atom")
      ->capture_default_str();
  app.add_option("--rabi0", opt.params.rabi0, "resonant Rabi frequency")
      ->capture_default_str();
  app.add_option("--delta0", opt.params.delta0,
                 "atomic frequency mismatch omega1 - omega2")
      ->capture_default_str();
  app.add_option("--deltaL", opt.params.deltaL,
                 "laser detuning omega2 - omega_L")
      ->capture_default_str();
  app.add_option("--kr12", opt.params.kr12, "dimensionless separation k r12")
      ->capture_default_str();
  app.add_option("--cos2eta", opt.params.cos2eta,
                 "squared cosine of the dipole orientation angle")
      ->capture_default_str();
  app.add_option("--gamma12-override", opt.gamma12_override,
                 "replace the geometric collective decay rate (sensitivity "
                 "studies)");
  app.add_option("--threads", opt.threads,
                 "worker threads for scans (output is thread-count independent)")
      ->capture_default_str();

  app.add_option("--tol-steady-residual", opt.tol.steady_residual,
                 "relative residual accepted for steady states")
      ->capture_default_str();
  app.add_option("--tol-condition-max", opt.tol.condition_max,
                 "largest accepted condition estimate of the bordered solve")
      ->capture_default_str();
  app.add_option("--tol-hermitize-max", opt.tol.hermitize_max,
                 "largest accepted Hermitization correction")
      ->capture_default_str();
  app.add_option("--tol-positivity-floor", opt.tol.positivity_floor,
                 "most negative accepted eigenvalue of a state")
      ->capture_default_str();
  app.add_option("--tol-resonance-rel", opt.tol.resonance_rel,
                 "relative width of the secular resonance guard")
      ->capture_default_str();
  app.add_option("--tol-trace-drift", opt.tol.trace_drift,
                 "largest accepted trace drift in time evolution")
      ->capture_default_str();
}

void finalize(CommonOptions& opt) {
  if (opt.has_override) opt.params.gamma12_override = opt.gamma12_override;
}

duet::Model parse_model(const std::string& name) {
  if (name == "full") return duet::Model::full;
  if (name == "mutual" || name == "secular_mutual")
    return duet::Model::secular_mutual;
  if (name == "cascade" || name == "secular_cascade")
    return duet::Model::secular_cascade;
  throw CLI::ValidationError("--model",
                             "expected full, mutual or cascade, got '" + name +
                                 "'");
}

std::string fmt(double v, int prec = 9) {
  std::ostringstream os;
  os << std::setprecision(prec) << v;
  return os.str();
}

// ------------------------------------------------------------------ point --

int run_point(const CommonOptions& opt, const std::string& model_name,
              bool as_json) {
  const duet::Model model = parse_model(model_name);
  const duet::CollectiveCoupling cc = duet::compute_u12(opt.params);

  duet::SteadyStateResult ss;
  std::optional<duet::XState> closed;

  if (model == duet::Model::full) {
    ss = duet::steady_state(duet::build_full_generator(opt.params), opt.tol,
                            duet::Basis::bare);
  } else {
    const duet::SecularForm form = model == duet::Model::secular_mutual
                                       ? duet::SecularForm::resonant_mutual
                                       : duet::SecularForm::resonant_cascade;
    ss = duet::steady_state(duet::build_secular_generator(opt.params, form, opt.tol),
                            opt.tol, duet::Basis::dressed);
    closed = duet::analytic_steady_state(duet::dressed_params(opt.params, cc.gamma12),
                                         form);
  }

  const double concurrence = duet::concurrence_general(ss.rho, opt.tol);

  // Dressed view of the state (already dressed for the secular models).
  duet::Matrix4 dressed = ss.rho;
  double cos2theta = 0.5;
  const double omega = std::hypot(opt.params.rabi0, opt.params.deltaL);
  if (model == duet::Model::full && omega > 0.0) {
    cos2theta = 0.5 + opt.params.deltaL / (2.0 * omega);
    const duet::Matrix4 u = duet::dressed_basis_rotation(cos2theta);
    dressed = (u.adjoint() * ss.rho * u).eval();
  } else if (model != duet::Model::full) {
    cos2theta = duet::dressed_params(opt.params, cc.gamma12).cos2theta;
  }

  if (as_json) {
    json j;
    j["model"] = duet::to_string(model);
    j["coupling"] = {{"omega12", cc.omega12}, {"gamma12", cc.gamma12}};
    j["concurrence"] = concurrence;
    j["residual"] = ss.residual;
    j["condition"] = ss.condition;
    j["basis"] = ss.basis == duet::Basis::bare ? "bare" : "dressed";
    j["cos2theta"] = cos2theta;
    json pops = json::array(), dpops = json::array();
    for (int k = 0; k < 4; ++k) {
      pops.push_back(ss.rho(k, k).real());
      dpops.push_back(dressed(k, k).real());
    }
    j["populations"] = pops;
    j["dressed_populations"] = dpops;
    j["abs_rho23_dressed"] = std::abs(dressed(1, 2));
    if (closed) {
      j["closed_form"] = {{"rho11", closed->rho11}, {"rho22", closed->rho22},
                          {"rho33", closed->rho33}, {"rho44", closed->rho44},
                          {"rho23", closed->rho23}};
      j["closed_form_gap"] =
          (dressed - closed->to_matrix()).cwiseAbs().maxCoeff();
      j["closed_form_concurrence"] = duet::concurrence_xstate(*closed);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "model: " << duet::to_string(model) << "\n";
  std::cout << "collective coupling: omega12 = " << fmt(cc.omega12)
            << ", gamma12 = " << fmt(cc.gamma12) << "\n";
  std::cout << "steady state ("
            << (ss.basis == duet::Basis::bare ? "bare" : "dressed")
            << " basis), residual " << fmt(ss.residual, 3) << ", condition "
            << fmt(ss.condition, 3) << ":\n";
  for (int r = 0; r < 4; ++r) {
    std::cout << "  ";
    for (int c = 0; c < 4; ++c) {
      const duet::Complex v = ss.rho(r, c);
      std::printf("(%+.6f%+.6fi) ", v.real(), v.imag());
    }
    std::cout << "\n";
  }
  std::cout << "dressed populations (cos2theta = " << fmt(cos2theta) << "): ";
  for (int k = 0; k < 4; ++k)
    std::cout << fmt(dressed(k, k).real(), 6) << (k < 3 ? ", " : "\n");
  std::cout << "dressed |rho23| = " << fmt(std::abs(dressed(1, 2)), 6) << "\n";
  if (closed) {
    std::cout << "closed form: rho11 = " << fmt(closed->rho11, 6)
              << ", rho22 = " << fmt(closed->rho22, 6)
              << ", rho33 = " << fmt(closed->rho33, 6)
              << ", rho44 = " << fmt(closed->rho44, 6)
              << ", rho23 = " << fmt(closed->rho23, 6) << "\n";
    std::cout << "closed-form gap (max elementwise) = "
              << fmt((dressed - closed->to_matrix()).cwiseAbs().maxCoeff(), 3)
              << "\n";
  }
  std::cout << "concurrence = " << fmt(concurrence) << "\n";
  return 0;
}

// ------------------------------------------------------------------ scans --

int run_scan_cmd(const CommonOptions& opt, const std::string& model_name,
                 int points, double rabi_min, double rabi_max,
                 const std::string& out, bool detuned) {
  duet::ScanSpec spec;
  spec.base = opt.params;
  spec.model = parse_model(model_name);
  spec.points = points;
  spec.rabi_min = rabi_min;
  spec.rabi_max = rabi_max;
  spec.threads = opt.threads;
  spec.tol = opt.tol;

  const duet::ScanResult result =
      detuned ? duet::run_detuned_peak_scan(spec) : duet::run_fig1_sweep(spec);
  duet::write_scan_csv(result, out);

  std::cout << "wrote " << result.rows.size() << " rows to " << out << "\n";
  std::cout << "peak: concurrence " << fmt(result.peak.grid_value, 6)
            << " at rabi0 = " << fmt(result.peak.grid_arg, 6) << " (refined "
            << fmt(result.peak.refined_value, 6) << " at "
            << fmt(result.peak.refined_arg, 6) << ")\n";
  if (result.expected_peak)
    std::cout << "sideband resonance expected at rabi0 = "
              << fmt(*result.expected_peak, 6) << "\n";
  else
    std::cout << "sideband resonance not reachable at these detunings\n";
  if (result.plateau)
    std::cout << "plateau [" << fmt(result.plateau->lo, 3) << ", "
              << fmt(result.plateau->hi, 3) << "]: mean "
              << fmt(result.plateau->mean, 6) << ", stddev "
              << fmt(result.plateau->stddev, 6) << " over "
              << result.plateau->count << " points\n";
  return 0;
}

int run_fig2_cmd(const std::string& model_name, int points, int threads,
                 const std::string& out) {
  duet::Fig2Spec spec;
  const duet::Model model = parse_model(model_name);
  if (model == duet::Model::full)
    throw CLI::ValidationError(
        "--model", "the rate-asymmetry surface is a closed-form scan; "
                   "use mutual or cascade");
  spec.form = model == duet::Model::secular_mutual
                  ? duet::SecularForm::resonant_mutual
                  : duet::SecularForm::resonant_cascade;
  spec.points_per_axis = points;
  spec.threads = threads;

  const duet::Fig2Result result = duet::run_fig2_sweep(spec);
  duet::write_fig2_csv(result, out);

  std::cout << "wrote " << result.rows.size() << " rows to " << out << "\n";
  std::cout << "maximum concurrence " << fmt(result.max_value, 6)
            << " at alpha = " << fmt(result.max_alpha, 6)
            << ", cos2theta = " << fmt(result.max_c2, 6) << "\n";
  return 0;
}

// --------------------------------------------------------------- validate --

json report_to_json(const duet::ValidationReport& report) {
  json j;
  j["version"] = duet::kVersion;
  j["all_pass"] = report.all_pass();
  j["checks"] = json::array();
  for (const duet::CheckResult& c : report.checks)
    j["checks"].push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"measured", c.measured},
                           {"bound", c.bound},
                           {"detail", c.detail}});
  return j;
}

int run_validate(const CommonOptions& opt, const std::string& out,
                 bool as_json) {
  const duet::ValidationReport report =
      duet::run_validation_suite(opt.threads, opt.tol);

  if (as_json) {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else {
    for (const duet::CheckResult& c : report.checks)
      std::cout << (c.pass ? "[pass] " : "[FAIL] ") << std::left
                << std::setw(30) << c.name << " measured " << std::setw(12)
                << fmt(c.measured, 4) << " bound " << std::setw(10)
                << fmt(c.bound, 4) << " " << c.detail << "\n";
    std::cout << (report.all_pass() ? "all checks passed"
                                    : "VALIDATION FAILED")
              << "\n";
  }
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open '" + out + "' for writing");
    os << report_to_json(report).dump(2) << "\n";
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "duet: steady-state entanglement of two nonidentical atoms, one "
      "laser-driven, coupled through their common radiation field"};
  app.set_version_flag("--version", std::string("duet ") + duet::kVersion);
  app.set_config("--config", "",
                 "flat key=value configuration file (keys match long options)");
  app.require_subcommand(1);

  CommonOptions opt;
  add_common_options(app, opt);

  // point
  auto* point = app.add_subcommand(
      "point", "steady state and concurrence at a single configuration");
  std::string point_model = "full";
  bool point_json = false;
  point->add_option("--model", point_model, "full, mutual or cascade")
      ->capture_default_str();
  point->add_flag("--json", point_json, "machine-readable output");

  // fig1 / detuned
  auto* fig1 = app.add_subcommand(
      "fig1", "concurrence versus drive strength at fixed detunings");
  auto* detuned = app.add_subcommand(
      "detuned", "drive-strength scan with the shifted sideband resonance");
  std::string fig1_model = "full", fig1_out = "fig1.csv";
  std::string detuned_out = "detuned.csv";
  int fig1_points = 351, detuned_points = 351;
  double fig1_min = 0.0, fig1_max = 35.0, detuned_min = 0.0, detuned_max = 35.0;
  std::string detuned_model = "full";
  fig1->add_option("--model", fig1_model, "full, mutual or cascade")
      ->capture_default_str();
  fig1->add_option("--points", fig1_points, "grid points")->capture_default_str();
  fig1->add_option("--rabi-min", fig1_min, "lowest drive strength")
      ->capture_default_str();
  fig1->add_option("--rabi-max", fig1_max, "highest drive strength")
      ->capture_default_str();
  fig1->add_option("--out", fig1_out, "CSV output path")->capture_default_str();
  detuned->add_option("--model", detuned_model, "full, mutual or cascade")
      ->capture_default_str();
  detuned->add_option("--points", detuned_points, "grid points")
      ->capture_default_str();
  detuned->add_option("--rabi-min", detuned_min, "lowest drive strength")
      ->capture_default_str();
  detuned->add_option("--rabi-max", detuned_max, "highest drive strength")
      ->capture_default_str();
  detuned->add_option("--out", detuned_out, "CSV output path")
      ->capture_default_str();

  // fig2
  auto* fig2 = app.add_subcommand(
      "fig2", "closed-form concurrence over rate asymmetry and dressing angle");
  std::string fig2_model = "mutual", fig2_out = "fig2.csv";
  int fig2_points = 81;
  fig2->add_option("--model", fig2_model, "mutual or cascade")
      ->capture_default_str();
  fig2->add_option("--points", fig2_points, "grid points per axis")
      ->capture_default_str();
  fig2->add_option("--out", fig2_out, "CSV output path")->capture_default_str();

  // validate
  auto* validate = app.add_subcommand(
      "validate", "cross-module consistency suite (nonzero exit on failure)");
  std::string validate_out;
  bool validate_json = false;
  validate->add_option("--out", validate_out, "write the JSON report here");
  validate->add_flag("--json", validate_json, "JSON to stdout instead of text");

  // Let the global options appear after the subcommand name as well, so
  // `duet point --rabi0 15` and `duet --rabi0 15 point` both parse.
  for (CLI::App* sub : app.get_subcommands({}))
    sub->fallthrough();

  opt.has_override = false;
  CLI11_PARSE(app, argc, argv);
  opt.has_override = app.count("--gamma12-override") > 0;
  finalize(opt);

  try {
    if (*point) return run_point(opt, point_model, point_json);
    if (*fig1)
      return run_scan_cmd(opt, fig1_model, fig1_points, fig1_min, fig1_max,
                          fig1_out, false);
    if (*detuned)
      return run_scan_cmd(opt, detuned_model, detuned_points, detuned_min,
                          detuned_max, detuned_out, true);
    if (*fig2) return run_fig2_cmd(fig2_model, fig2_points, opt.threads, fig2_out);
    if (*validate) return run_validate(opt, validate_out, validate_json);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
