#pragma once

#include "duet/tolerances.hpp"
#include "duet/types.hpp"

namespace duet {

struct SteadyStateResult {
  Matrix4 rho;
  double residual;       // ||G vec(rho)||_inf / ||G||_inf
  double condition;      // estimated condition number of the bordered system
  double hermitization;  // ||rho - rho^dagger||_inf / 2 before symmetrizing
  Basis basis;
};

// Solves G vec(rho) = 0, tr(rho) = 1 for a trace-preserving generator G.
//
// The singular 16x16 system is bordered: the trace constraint replaces the
// row where G is furthest from diagonal dominance (the most redundant one),
// chosen as argmax_k of sum_{j != k} |G_kj| - |G_kk| with lowest-index
// tie-breaking, making the solve deterministic.  The solution is Hermitized
// and its residual measured against the original G.  Throws
// std::runtime_error when the condition estimate, the residual, the
// Hermitization correction, or positivity exceed the tolerances.
SteadyStateResult steady_state(const Matrix16& generator,
                               const Tolerances& tol = {},
                               Basis basis = Basis::bare);

// Integrates d vec(rho)/dt = G vec(rho) from rho0 to t_final with an
// embedded Cash-Karp Runge-Kutta 4(5) scheme and adaptive step size capped
// at dt_max.  Throws std::runtime_error on step-size underflow (stiffness)
// or when |tr(rho) - 1| drifts beyond tol.trace_drift.
Matrix4 evolve(const Matrix16& generator, const Matrix4& rho0, double t_final,
               double dt_max, const Tolerances& tol = {});

}  // namespace duet
