#pragma once

#include <string>
#include <vector>

#include "duet/tolerances.hpp"

namespace duet {

struct CheckResult {
  std::string name;
  bool pass;
  double measured;  // worst observed value of the check's metric
  double bound;     // threshold it was compared against
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Deterministic cross-module consistency suite (fixed RNG seeds):
//
//   secular_vs_analytic_{mutual,cascade}  null space of the secular generator
//                                         against the closed-form X state
//   concurrence_equivalence               X-state formula vs general algorithm
//   local_unitary_invariance              concurrence under random U1 x U2
//   decomposition_reconstruction          two-term decomposition rebuilds the
//                                         inner block of the X state
//   full_vs_secular_convergence           dressed-basis gap shrinks with
//                                         growing detuning splitting
//   off_resonance_decoupling              undriven atom empties when far detuned
//   steady_state_physicality              random full-model steady states are
//                                         Hermitian, unit-trace, positive
//
// Runs row-parallel where it helps; results are independent of `threads`.
ValidationReport run_validation_suite(int threads = 1,
                                      const Tolerances& tol = {});

}  // namespace duet
