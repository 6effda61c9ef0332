#pragma once

namespace duet {

// Numerical acceptance thresholds used across the library.  Every solver and
// checker takes one of these; the defaults are deliberately strict because
// the 16-dimensional problems here are small and well scaled.
struct Tolerances {
  // steady_state: ||G vec(rho)||_inf must not exceed this times ||G||_inf.
  double steady_residual = 1e-10;
  // steady_state: reject bordered systems whose condition estimate exceeds this.
  double condition_max = 1e12;
  // steady_state: largest Hermitization correction accepted, ||rho - rho^dag||_inf / 2.
  double hermitize_max = 1e-8;
  // Most negative eigenvalue accepted before a state is declared non-physical.
  double positivity_floor = -1e-8;
  // Relative half-width of the resonance window |Omega - Delta| used by the
  // resonant secular builders.
  double resonance_rel = 1e-9;
  // evolve: maximum |tr(rho) - 1| drift over an integration.
  double trace_drift = 1e-9;
  // Hermiticity / trace slack when validating an input density matrix.
  double density_herm = 1e-10;
  double density_trace = 1e-10;
};

}  // namespace duet
