#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "duet/dressed.hpp"
#include "duet/liouvillian.hpp"
#include "duet/sweep.hpp"
#include "duet/types.hpp"

using namespace duet;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream buf;
  buf << is.rdbuf();
  return buf.str();
}

bool rows_identical(const std::vector<SweepRow>& a,
                    const std::vector<SweepRow>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].x0 != b[i].x0 || a[i].x1 != b[i].x1 ||
        a[i].concurrence != b[i].concurrence ||
        a[i].abs_rho23 != b[i].abs_rho23 || a[i].residual != b[i].residual)
      return false;
    for (int k = 0; k < 4; ++k)
      if (a[i].populations[k] != b[i].populations[k]) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("linspace pins both endpoints") {
  const std::vector<double> xs = linspace(0.0, 35.0, 351);
  REQUIRE(xs.size() == 351);
  CHECK(xs.front() == 0.0);
  CHECK(xs.back() == 35.0);
  CHECK(xs[10] == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(linspace(2.5, 9.0, 1) == std::vector<double>{2.5});
  CHECK_THROWS_AS(linspace(0.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("find_peak recovers an off-grid parabola vertex") {
  const std::vector<double> xs = linspace(0.0, 4.0, 21);
  std::vector<double> ys(xs.size());
  for (size_t i = 0; i < xs.size(); ++i)
    ys[i] = 5.0 - (xs[i] - 2.03) * (xs[i] - 2.03);

  const PeakReport peak = find_peak(xs, ys);
  CHECK(peak.grid_arg == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(peak.refined_arg == doctest::Approx(2.03).epsilon(1e-10));
  CHECK(peak.refined_value == doctest::Approx(5.0).epsilon(1e-10));

  // A peak on the boundary is left where it is.
  std::vector<double> ramp(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) ramp[i] = xs[i];
  const PeakReport edge = find_peak(xs, ramp);
  CHECK(edge.grid_arg == 4.0);
  CHECK(edge.refined_arg == 4.0);

  CHECK_THROWS_AS(find_peak({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(find_peak({1.0, 2.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("scan rejects malformed specs") {
  ScanSpec spec;
  spec.points = 1;
  CHECK_THROWS_AS(run_fig1_sweep(spec), std::invalid_argument);

  spec.points = 11;
  spec.rabi_min = -1.0;
  CHECK_THROWS_AS(run_fig1_sweep(spec), std::invalid_argument);

  spec.rabi_min = 5.0;
  spec.rabi_max = 5.0;
  CHECK_THROWS_AS(run_fig1_sweep(spec), std::invalid_argument);

  spec = ScanSpec{};
  spec.base.gamma1 = -1.0;
  CHECK_THROWS_AS(run_fig1_sweep(spec), std::invalid_argument);
}

TEST_CASE("full-model scan is deterministic across thread counts") {
  ScanSpec spec;
  spec.base.delta0 = 15.0;
  spec.model = Model::full;
  spec.points = 7;
  spec.rabi_max = 12.0;

  spec.threads = 1;
  const ScanResult serial = run_fig1_sweep(spec);
  spec.threads = 4;
  const ScanResult parallel = run_fig1_sweep(spec);

  CHECK(rows_identical(serial.rows, parallel.rows));
  CHECK(serial.peak.grid_arg == parallel.peak.grid_arg);
  CHECK(serial.peak.refined_value == parallel.peak.refined_value);

  // And a repeat run reproduces itself bit for bit.
  const ScanResult again = run_fig1_sweep(spec);
  CHECK(rows_identical(parallel.rows, again.rows));
}

TEST_CASE("both scan entry points run the same scan") {
  ScanSpec spec;
  spec.base.delta0 = 15.0;
  spec.base.deltaL = 5.0;
  spec.model = Model::secular_mutual;
  spec.points = 21;
  spec.rabi_max = 30.0;

  const ScanResult a = run_fig1_sweep(spec);
  const ScanResult b = run_detuned_peak_scan(spec);
  CHECK(rows_identical(a.rows, b.rows));

  // Sideband condition sqrt(Delta^2 - deltaL^2) with Delta = delta0 + deltaL.
  REQUIRE(a.expected_peak.has_value());
  CHECK(*a.expected_peak == doctest::Approx(std::sqrt(375.0)).epsilon(1e-14));
}

TEST_CASE("plateau and expected-peak markers vanish when undefined") {
  ScanSpec spec;
  spec.model = Model::secular_mutual;
  spec.points = 5;
  spec.rabi_max = 4.0;

  // delta0 = deltaL = 0: no saturation window, no reachable sideband.
  const ScanResult flat = run_fig1_sweep(spec);
  CHECK_FALSE(flat.plateau.has_value());
  CHECK_FALSE(flat.expected_peak.has_value());

  // Delta = -10 while |deltaL| = 20: resonance unreachable, window fine.
  spec.base.delta0 = 10.0;
  spec.base.deltaL = -20.0;
  spec.points = 11;
  spec.rabi_max = 10.0;
  const ScanResult skew = run_fig1_sweep(spec);
  CHECK(skew.plateau.has_value());
  CHECK_FALSE(skew.expected_peak.has_value());
  CHECK(skew.plateau->count == 7);  // grid points 2, 3, ..., 8
}

TEST_CASE("secular rows carry normalized closed-form states") {
  ScanSpec spec;
  spec.base.delta0 = 15.0;
  spec.model = Model::secular_cascade;
  spec.points = 16;
  spec.rabi_max = 30.0;
  spec.threads = 2;

  const ScanResult result = run_fig1_sweep(spec);
  for (const SweepRow& row : result.rows) {
    const double total = row.populations[0] + row.populations[1] +
                         row.populations[2] + row.populations[3];
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(row.residual == 0.0);
    const double floor =
        2.0 * std::max(0.0, row.abs_rho23 -
                                std::sqrt(row.populations[0] *
                                          row.populations[3]));
    CHECK(row.concurrence == doctest::Approx(floor).epsilon(1e-12));
  }
}

TEST_CASE("csv output is byte-stable and thread-independent") {
  ScanSpec spec;
  spec.base.delta0 = 15.0;
  spec.model = Model::secular_mutual;
  spec.points = 12;
  spec.rabi_max = 20.0;

  spec.threads = 1;
  const ScanResult serial = run_fig1_sweep(spec);
  spec.threads = 3;
  const ScanResult parallel = run_fig1_sweep(spec);

  const std::filesystem::path dir = std::filesystem::temp_directory_path();
  const std::filesystem::path pa = dir / "duet_test_scan_a.csv";
  const std::filesystem::path pb = dir / "duet_test_scan_b.csv";
  write_scan_csv(serial, pa.string());
  write_scan_csv(parallel, pb.string());

  const std::string a = slurp(pa);
  const std::string b = slurp(pb);
  CHECK(a == b);
  CHECK(a.find("# model=secular_mutual\n") != std::string::npos);
  CHECK(a.find("rabi0,concurrence,") != std::string::npos);

  // 12 data rows, one header row, plus '#' metadata lines.
  int lines = 0;
  for (char ch : a)
    if (ch == '\n') ++lines;
  CHECK(lines >= 12 + 1);

  std::filesystem::remove(pa);
  std::filesystem::remove(pb);
}

TEST_CASE("rate-asymmetry surface has row-major structure") {
  Fig2Spec spec;
  spec.points_per_axis = 5;
  spec.alpha_min = -0.5;
  spec.alpha_max = 0.5;
  spec.c2_min = 0.2;
  spec.c2_max = 0.8;
  spec.threads = 2;

  const Fig2Result result = run_fig2_sweep(spec);
  REQUIRE(result.rows.size() == 25);

  const std::vector<double> alphas = linspace(-0.5, 0.5, 5);
  const std::vector<double> c2s = linspace(0.2, 0.8, 5);
  double best = -1.0;
  for (int idx = 0; idx < 25; ++idx) {
    CHECK(result.rows[idx].x0 == alphas[idx / 5]);
    CHECK(result.rows[idx].x1 == c2s[idx % 5]);
    const double total =
        result.rows[idx].populations[0] + result.rows[idx].populations[1] +
        result.rows[idx].populations[2] + result.rows[idx].populations[3];
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    best = std::max(best, result.rows[idx].concurrence);
  }
  CHECK(result.max_value == best);
  CHECK(result.max_value > 0.0);

  Fig2Spec bad = spec;
  bad.form = SecularForm::off_resonance;
  CHECK_THROWS_AS(run_fig2_sweep(bad), std::invalid_argument);
  bad = spec;
  bad.points_per_axis = 1;
  CHECK_THROWS_AS(run_fig2_sweep(bad), std::invalid_argument);
  bad = spec;
  bad.alpha_min = -1.0;
  CHECK_THROWS_AS(run_fig2_sweep(bad), std::invalid_argument);
  bad = spec;
  bad.c2_max = 1.0;
  CHECK_THROWS_AS(run_fig2_sweep(bad), std::invalid_argument);
}

TEST_CASE("fig2 csv round-trips deterministically") {
  Fig2Spec spec;
  spec.form = SecularForm::resonant_cascade;
  spec.points_per_axis = 4;
  spec.alpha_min = -0.4;
  spec.alpha_max = 0.4;
  spec.c2_min = 0.3;
  spec.c2_max = 0.7;

  const Fig2Result result = run_fig2_sweep(spec);
  const std::filesystem::path dir = std::filesystem::temp_directory_path();
  const std::filesystem::path pa = dir / "duet_test_fig2_a.csv";
  const std::filesystem::path pb = dir / "duet_test_fig2_b.csv";
  write_fig2_csv(result, pa.string());
  write_fig2_csv(result, pb.string());
  CHECK(slurp(pa) == slurp(pb));
  CHECK(slurp(pa).find("# form=resonant_cascade\n") != std::string::npos);
  std::filesystem::remove(pa);
  std::filesystem::remove(pb);
}

TEST_CASE("a sign flip in the cross rate is caught by the generator") {
  // The closed form is odd in gamma_bar12 through the coherence: flipping
  // the sign must move the state off the generator's null space by a
  // macroscopic margin.  Guards the test suite against a silent sign error
  // in the transfer channel.
  const double g12 = 2.0 / std::numbers::pi;
  DressedParams dp = dressed_params_from_angle(0.5, 1.0, 1.0, g12);
  const XState truth = analytic_steady_state(dp, SecularForm::resonant_mutual);

  DressedParams flipped = dp;
  flipped.gamma_bar12 = -flipped.gamma_bar12;
  const XState wrong =
      analytic_steady_state(flipped, SecularForm::resonant_mutual);
  CHECK(wrong.rho23 == doctest::Approx(-truth.rho23).epsilon(1e-13));

  SystemParams params;
  params.rabi0 = 6.0;
  params.delta0 = 6.0;
  params.deltaL = 0.0;
  params.gamma12_override = g12;
  const Matrix16 g =
      build_secular_generator(params, SecularForm::resonant_mutual);

  const double res_truth =
      (g * vec(truth.to_matrix())).cwiseAbs().maxCoeff();
  const double res_wrong =
      (g * vec(wrong.to_matrix())).cwiseAbs().maxCoeff();
  CHECK(res_truth < 1e-12 * g.cwiseAbs().maxCoeff());
  CHECK(res_wrong > 1e-2);
}

}  // TEST_SUITE
