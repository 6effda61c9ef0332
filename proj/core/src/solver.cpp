#include "duet/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace duet {

namespace {

// Infinity norm (max absolute row sum).
double inf_norm(const Matrix16& m) {
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

SteadyStateResult steady_state(const Matrix16& generator,
                               const Tolerances& tol, Basis basis) {
  // A trace-preserving generator has linearly dependent rows (the columns
  // of G sum to zero over the trace positions), so one equation is
  // redundant.  Replace the row that is furthest from diagonal dominance --
  // the least informative one -- by the trace constraint.  Lowest index wins
  // ties, keeping the solve fully deterministic.
  int replaced = 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 16; ++k) {
    const double diag = std::abs(generator(k, k));
    const double off = generator.row(k).cwiseAbs().sum() - diag;
    const double score = off - diag;
    if (score > worst) {
      worst = score;
      replaced = k;
    }
  }

  Matrix16 bordered = generator;
  bordered.row(replaced).setZero();
  // tr(rho) picks the vec positions of the diagonal: 4*k + k.
  for (int k = 0; k < 4; ++k) bordered(replaced, 5 * k) = 1.0;
  Vector16 rhs = Vector16::Zero();
  rhs(replaced) = 1.0;

  Eigen::PartialPivLU<Matrix16> lu(bordered);
  const double rcond = lu.rcond();
  const double condition =
      rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(condition < tol.condition_max)) {
    std::ostringstream msg;
    msg << "steady_state: bordered system ill-conditioned (estimate "
        << condition << " > " << tol.condition_max
        << "); the generator may have a degenerate null space";
    throw std::runtime_error(msg.str());
  }

  const Matrix4 raw = unvec(lu.solve(rhs));
  const double hermitization = 0.5 * (raw - raw.adjoint()).cwiseAbs().maxCoeff();
  if (hermitization > tol.hermitize_max) {
    std::ostringstream msg;
    msg << "steady_state: solution is not Hermitian (correction "
        << hermitization << " > " << tol.hermitize_max << ")";
    throw std::runtime_error(msg.str());
  }
  Matrix4 rho = 0.5 * (raw + raw.adjoint());
  rho /= rho.trace().real();

  const double residual = (generator * vec(rho)).cwiseAbs().maxCoeff() /
                          std::max(inf_norm(generator), 1e-300);
  if (!(residual <= tol.steady_residual)) {
    std::ostringstream msg;
    msg << "steady_state: residual " << residual << " exceeds "
        << tol.steady_residual;
    throw std::runtime_error(msg.str());
  }

  const DensityCheck chk = check_density_matrix(rho);
  if (chk.min_eigenvalue < tol.positivity_floor) {
    std::ostringstream msg;
    msg << "steady_state: solution not positive semidefinite (min eigenvalue "
        << chk.min_eigenvalue << ")";
    throw std::runtime_error(msg.str());
  }

  return {rho, residual, condition, hermitization, basis};
}

Matrix4 evolve(const Matrix16& generator, const Matrix4& rho0, double t_final,
               double dt_max, const Tolerances& tol) {
  if (!(dt_max > 0.0))
    throw std::invalid_argument("evolve: dt_max must be positive");
  if (t_final <= 0.0) return rho0;

  // Cash-Karp embedded Runge-Kutta 4(5).
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 3.0 / 10, a42 = -9.0 / 10, a43 = 6.0 / 5;
  static constexpr double a51 = -11.0 / 54, a52 = 5.0 / 2, a53 = -70.0 / 27,
                          a54 = 35.0 / 27;
  static constexpr double a61 = 1631.0 / 55296, a62 = 175.0 / 512,
                          a63 = 575.0 / 13824, a64 = 44275.0 / 110592,
                          a65 = 253.0 / 4096;
  static constexpr double b1 = 37.0 / 378, b3 = 250.0 / 621, b4 = 125.0 / 594,
                          b6 = 512.0 / 1771;
  static constexpr double e1 = b1 - 2825.0 / 27648, e3 = b3 - 18575.0 / 48384,
                          e4 = b4 - 13525.0 / 55296, e5 = -277.0 / 14336,
                          e6 = b6 - 1.0 / 4;

  constexpr double atol = 1e-12, rtol = 1e-9;
  const double dt_floor = 1e-14 * std::max(t_final, 1.0);

  Vector16 y = vec(rho0);
  double t = 0.0;
  double dt = std::min(dt_max, t_final);

  while (t < t_final) {
    dt = std::min(dt, t_final - t);

    const Vector16 k1 = generator * y;
    const Vector16 k2 = generator * (y + dt * a21 * k1);
    const Vector16 k3 = generator * (y + dt * (a31 * k1 + a32 * k2));
    const Vector16 k4 = generator * (y + dt * (a41 * k1 + a42 * k2 + a43 * k3));
    const Vector16 k5 =
        generator * (y + dt * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Vector16 k6 = generator * (y + dt * (a61 * k1 + a62 * k2 + a63 * k3 +
                                               a64 * k4 + a65 * k5));

    const Vector16 y5 = y + dt * (b1 * k1 + b3 * k3 + b4 * k4 + b6 * k6);
    const Vector16 err = dt * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6);

    double err_norm = 0.0;
    for (int i = 0; i < 16; ++i) {
      const double scale =
          atol + rtol * std::max(std::abs(y(i)), std::abs(y5(i)));
      err_norm = std::max(err_norm, std::abs(err(i)) / scale);
    }

    if (err_norm <= 1.0) {
      t += dt;
      y = y5;
    }

    const double factor = err_norm > 0.0
                              ? 0.9 * std::pow(err_norm, -0.2)
                              : 5.0;
    dt *= std::clamp(factor, 0.1, 5.0);
    dt = std::min(dt, dt_max);
    if (dt < dt_floor)
      throw std::runtime_error(
          "evolve: step size underflow, the generator is too stiff for this "
          "integrator at the requested accuracy");
  }

  Matrix4 rho = unvec(y);
  const double drift = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (drift > tol.trace_drift) {
    std::ostringstream msg;
    msg << "evolve: trace drifted by " << drift << " (tolerance "
        << tol.trace_drift << ")";
    throw std::runtime_error(msg.str());
  }
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace duet
