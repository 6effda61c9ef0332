#include "duet/dressed.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace duet {

namespace {

DressedParams from_rates(double omega, double delta, double cos2theta,
                         double gamma1, double gamma2, double gamma12) {
  if (!(cos2theta >= 0.0 && cos2theta <= 1.0))
    throw std::invalid_argument("dressed_params: cos2theta outside [0, 1]");

  const double c2 = cos2theta;
  const double s2 = 1.0 - c2;

  DressedParams dp;
  dp.omega = omega;
  dp.delta = delta;
  dp.cos2theta = c2;
  dp.gamma1 = gamma1;
  // sin^2(2 theta) = 4 cos^2 sin^2; the Rz channel keeps the full weight of
  // the sin(2 theta) Rz component of S2- because Rz itself carries the 1/2.
  dp.gamma0 = 4.0 * gamma2 * c2 * s2;
  dp.gamma_plus = gamma2 * c2 * c2;
  dp.gamma_minus = gamma2 * s2 * s2;
  dp.gamma_bar12 = gamma12 * c2;
  dp.gamma_total = gamma1 + dp.gamma0 + dp.gamma_plus + dp.gamma_minus;
  return dp;
}

}  // namespace

DressedParams dressed_params(const SystemParams& params, double gamma12) {
  params.validate();
  const double omega = std::hypot(params.rabi0, params.deltaL);
  if (omega <= 0.0)
    throw std::invalid_argument(
        "dressed_params: rabi0 = deltaL = 0, dressing undefined");
  const double cos2theta = 0.5 + params.deltaL / (2.0 * omega);
  return from_rates(omega, params.delta0 + params.deltaL, cos2theta,
                    params.gamma1, params.gamma2, gamma12);
}

DressedParams dressed_params_from_angle(double cos2theta, double gamma1,
                                        double gamma2, double gamma12) {
  if (!(gamma1 > 0.0) || !(gamma2 > 0.0))
    throw std::invalid_argument("dressed_params_from_angle: rates must be positive");
  if (std::abs(gamma12) > std::sqrt(gamma1 * gamma2))
    throw std::invalid_argument(
        "dressed_params_from_angle: |gamma12| > sqrt(gamma1 gamma2)");
  return from_rates(0.0, 0.0, cos2theta, gamma1, gamma2, gamma12);
}

std::array<double, 4> dressed_energies(const DressedParams& dp) {
  return {0.5 * (dp.delta + dp.omega), 0.5 * (dp.delta - dp.omega),
          0.5 * (dp.omega - dp.delta), -0.5 * (dp.delta + dp.omega)};
}

Matrix4 dressed_basis_rotation(double cos2theta) {
  if (!(cos2theta >= 0.0 && cos2theta <= 1.0))
    throw std::invalid_argument("dressed_basis_rotation: cos2theta outside [0, 1]");
  const double c = std::sqrt(cos2theta);
  const double s = std::sqrt(1.0 - cos2theta);

  // Columns are |+> = c |e2> + s |g2> and |-> = s |e2> - c |g2> on the
  // driven atom, identity on atom 1.  Real and self-inverse.
  Matrix2 u;
  u << c, s, s, -c;

  Matrix4 big = Matrix4::Zero();
  big.block<2, 2>(0, 0) = u;
  big.block<2, 2>(2, 2) = u;
  return big;
}

Matrix4 XState::to_matrix() const {
  Matrix4 rho = Matrix4::Zero();
  rho(0, 0) = rho11;
  rho(1, 1) = rho22;
  rho(2, 2) = rho33;
  rho(3, 3) = rho44;
  rho(1, 2) = rho23;
  rho(2, 1) = rho23;
  return rho;
}

XState analytic_steady_state(const DressedParams& dp, SecularForm form) {
  const double g1 = dp.gamma1;
  const double g0 = dp.gamma0;
  const double gp = dp.gamma_plus;
  const double gm = dp.gamma_minus;
  const double gb = dp.gamma_bar12;
  const double g = dp.gamma_total;

  XState x{0.0, 0.0, 0.0, 0.0, 0.0};

  switch (form) {
    case SecularForm::off_resonance: {
      // Decoupled: atom 1 relaxes to its ground state, the dressed pair to
      // the detailed-balance mixture of the sideband channels.
      x.rho33 = gm / (gp + gm);
      x.rho44 = gp / (gp + gm);
      break;
    }
    case SecularForm::resonant_mutual: {
      const double d = (g - g0) * (g - g0) * (g1 * (gp + gm) - gb * gb) +
                       (gp + gm) * (g0 * g1 * (g - g0) + 4.0 * gm * gb * gb);
      x.rho11 = gm * gm * gb * gb / d;
      x.rho22 = gm * (g1 + gp) * gb * gb / d;
      x.rho44 =
          1.0 - gm * (g * g1 * (g - g0) + 3.0 * gm * gb * gb) / d;
      x.rho23 = g1 * gm * (g - g0) * gb / d;
      x.rho33 = 1.0 - x.rho11 - x.rho22 - x.rho44;
      break;
    }
    case SecularForm::resonant_cascade: {
      // Same populations and coherence up to the normalization, except the
      // ground-state weight, whose photon-exchange correction is smaller.
      const double d = (gp + gm) * (g * g1 * (g - g0) + 2.0 * gm * gb * gb);
      x.rho11 = gm * gm * gb * gb / d;
      x.rho22 = gm * (g1 + gp) * gb * gb / d;
      x.rho44 =
          1.0 -
          gm * (g * g1 * (g - g0) + (g1 + gp + 2.0 * gm) * gb * gb) / d;
      x.rho23 = g1 * gm * (g - g0) * gb / d;
      x.rho33 = 1.0 - x.rho11 - x.rho22 - x.rho44;
      break;
    }
  }

  // Internal-consistency gate: the closed forms must land on a physical
  // X state; if not, something upstream (rates, resonance) is wrong, and
  // clamping would only hide it.
  const double slack = 1e-12;
  const bool pops_ok =
      x.rho11 >= -slack && x.rho22 >= -slack && x.rho33 >= -slack &&
      x.rho44 >= -slack && x.rho11 <= 1.0 + slack && x.rho22 <= 1.0 + slack &&
      x.rho33 <= 1.0 + slack && x.rho44 <= 1.0 + slack;
  const double coh_bound =
      std::sqrt(std::max(x.rho22, 0.0) * std::max(x.rho33, 0.0));
  if (!pops_ok || std::abs(x.rho23) > coh_bound + slack) {
    std::ostringstream msg;
    msg << "analytic_steady_state: non-physical X state (rho11=" << x.rho11
        << ", rho22=" << x.rho22 << ", rho33=" << x.rho33
        << ", rho44=" << x.rho44 << ", rho23=" << x.rho23 << ")";
    throw std::logic_error(msg.str());
  }
  return x;
}

}  // namespace duet
