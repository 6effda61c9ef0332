#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "duet/liouvillian.hpp"
#include "duet/system_params.hpp"
#include "duet/tolerances.hpp"

namespace duet {

// How each point of a scan is evaluated.  "full" solves the complete master
// equation and rotates into the dressed basis; the secular models evaluate
// the closed-form X state at the local dressed parameters (physically
// meaningful near the sideband resonance Omega = Delta, but defined
// everywhere, which is exactly what is needed to see where the reduction
// stops being valid).
enum class Model { full, secular_mutual, secular_cascade };

std::string to_string(Model model);
std::string to_string(SecularForm form);

struct SweepRow {
  double x0;  // first swept coordinate (rabi0, or alpha for rate scans)
  double x1;  // second swept coordinate (cos^2 theta for rate scans; else 0)
  double concurrence;
  std::array<double, 4> populations;  // dressed-basis populations
  double abs_rho23;                   // |<e1 -| rho |g1 +>| (dressed basis)
  double residual;                    // steady-state residual (0 for closed form)
};

struct PeakReport {
  double grid_arg;       // swept value with the largest concurrence
  double grid_value;     // concurrence there
  double refined_arg;    // parabolic refinement through the three top points
  double refined_value;  // refined height (clamped to +/- one grid step)
};

struct PlateauReport {
  double lo, hi;  // window in the swept coordinate (inclusive)
  double mean;
  double stddev;
  int count;  // grid points inside the window
};

// Peak location on a uniform grid with three-point parabolic refinement;
// the refined argument is clamped to one grid step around the maximum.
PeakReport find_peak(const std::vector<double>& xs,
                     const std::vector<double>& ys);

std::vector<double> linspace(double lo, double hi, int n);

// ------------------------------------------------------------------ scans --

struct ScanSpec {
  SystemParams base;  // rabi0 is overwritten by the swept value
  Model model = Model::full;
  int points = 351;
  double rabi_min = 0.0;
  double rabi_max = 35.0;
  int threads = 1;
  Tolerances tol;
};

struct ScanResult {
  ScanSpec spec;
  std::vector<SweepRow> rows;
  PeakReport peak;
  // Statistics over the saturation window rabi0 in [2 gamma1, 0.8 delta0];
  // absent when the window is empty.
  std::optional<PlateauReport> plateau;
  // Drive strength where the dressed sideband meets the undriven atom,
  // sqrt(Delta^2 - deltaL^2); absent when Delta <= |deltaL| (the resonance
  // is not reachable by any drive strength).
  std::optional<double> expected_peak;
};

// Concurrence versus drive strength at fixed detunings.  Both entry points
// run the same scan; run_detuned_peak_scan is the deltaL != 0 study and
// simply keeps its name for discoverability in scripts.
ScanResult run_fig1_sweep(const ScanSpec& spec);
ScanResult run_detuned_peak_scan(const ScanSpec& spec);

// ------------------------------------------------- rate-asymmetry surface --

// Scan of the closed-form steady state over the rate asymmetry
// alpha = (gamma1 - gamma2) / (gamma1 + gamma2) (at fixed gamma1 + gamma2 = 2)
// and the dressing angle cos^2 theta, with the collective rate taken from
// the reference geometry: gamma12 = (2/pi) sqrt(gamma1 gamma2).
struct Fig2Spec {
  SecularForm form = SecularForm::resonant_mutual;
  int points_per_axis = 81;
  double alpha_min = -0.95, alpha_max = 0.95;
  double c2_min = 0.02, c2_max = 0.98;
  int threads = 1;
};

struct Fig2Result {
  Fig2Spec spec;
  std::vector<SweepRow> rows;  // row-major, alpha outer loop, cos^2 theta inner
  double max_value;
  double max_alpha;
  double max_c2;
};

Fig2Result run_fig2_sweep(const Fig2Spec& spec);

// ------------------------------------------------------------------- csv ---

// UTF-8 CSV with '#'-prefixed key=value metadata lines before the header
// row.  Deterministic: no timestamps, fixed scientific formatting, identical
// bytes for identical inputs regardless of thread count.
void write_scan_csv(const ScanResult& result, const std::string& path);
void write_fig2_csv(const Fig2Result& result, const std::string& path);

}  // namespace duet
