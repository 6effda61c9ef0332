#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "duet/collective_coupling.hpp"
#include "duet/dressed.hpp"
#include "duet/solver.hpp"

using namespace duet;

namespace {

// Reference resonant configuration: equal rates, symmetric dressing.
SystemParams reference_resonant() {
  SystemParams p;
  p.rabi0 = 15.0;
  p.delta0 = 15.0;
  return p;
}

}  // namespace

TEST_SUITE("dressed") {

TEST_CASE("dressing angle and rates at zero laser detuning") {
  SystemParams p = reference_resonant();
  const DressedParams dp = dressed_params(p, 2.0 / std::numbers::pi);

  CHECK(dp.omega == doctest::Approx(15.0));
  CHECK(dp.delta == doctest::Approx(15.0));
  CHECK(dp.cos2theta == doctest::Approx(0.5));
  // Symmetric dressing: the spectral-center channel carries the whole
  // single-atom rate, each sideband a quarter.
  CHECK(dp.gamma0 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dp.gamma_plus == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(dp.gamma_minus == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(dp.gamma_bar12 == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));
  CHECK(dp.gamma_total == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("dressing rates at cos^2 theta = 0.8") {
  SystemParams p;
  p.rabi0 = 4.0;
  p.deltaL = 3.0;  // Omega = 5, cos^2 theta = 1/2 + 3/10 = 0.8
  p.gamma2 = 2.0;
  const DressedParams dp = dressed_params(p, 0.5);

  CHECK(dp.cos2theta == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(dp.gamma0 == doctest::Approx(0.64 * p.gamma2).epsilon(1e-13));
  CHECK(dp.gamma_plus == doctest::Approx(0.64 * p.gamma2).epsilon(1e-13));
  CHECK(dp.gamma_minus == doctest::Approx(0.04 * p.gamma2).epsilon(1e-13));
  CHECK(dp.gamma_bar12 == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("channel rates always add up to the driven atom's rate") {
  // gamma_plus + gamma_minus + gamma0 / 2 = gamma2 for every angle.
  for (double c2 = 0.0; c2 <= 1.0; c2 += 0.1) {
    const DressedParams dp = dressed_params_from_angle(c2, 1.3, 2.7, 0.4);
    CHECK(dp.gamma_plus + dp.gamma_minus + 0.5 * dp.gamma0 ==
          doctest::Approx(2.7).epsilon(1e-13));
  }
}

TEST_CASE("dressing is undefined without drive and detuning") {
  SystemParams p;
  p.rabi0 = 0.0;
  p.deltaL = 0.0;
  CHECK_THROWS_AS(dressed_params(p, 0.1), std::invalid_argument);
}

TEST_CASE("dressed energies degenerate exactly at the sideband resonance") {
  DressedParams dp = dressed_params_from_angle(0.5, 1.0, 1.0, 0.3);
  dp.omega = 3.0;
  dp.delta = 5.0;
  const std::array<double, 4> e = dressed_energies(dp);
  CHECK(e[0] == doctest::Approx(4.0));
  CHECK(e[1] == doctest::Approx(1.0));
  CHECK(e[2] == doctest::Approx(-1.0));
  CHECK(e[3] == doctest::Approx(-4.0));

  dp.delta = 3.0;  // Omega = Delta
  const std::array<double, 4> r = dressed_energies(dp);
  CHECK(r[1] == r[2]);
  CHECK(r[1] == doctest::Approx(0.0));
}

TEST_CASE("basis rotation is unitary and self-inverse") {
  const Matrix4 u = dressed_basis_rotation(0.8);
  CHECK((u * u - Matrix4::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((u.adjoint() * u - Matrix4::Identity()).cwiseAbs().maxCoeff() < 1e-14);

  // At cos^2 theta = 1 the dressed pair reduces to |+> = |e2>, |-> = -|g2>.
  const Matrix4 top = dressed_basis_rotation(1.0);
  CHECK(std::abs(top(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(top(1, 1) + 1.0) < 1e-15);
}

TEST_CASE("closed-form steady state, equal rates, symmetric dressing") {
  // Independently frozen reference values for gamma1 = gamma2 = 1,
  // cos^2 theta = 1/2, gamma12 = 2/pi (40-digit arithmetic, rounded).
  const DressedParams dp =
      dressed_params_from_angle(0.5, 1.0, 1.0, 2.0 / std::numbers::pi);

  const XState mutual = analytic_steady_state(dp, SecularForm::resonant_mutual);
  CHECK(mutual.rho11 == doctest::Approx(0.0037301166314892931).epsilon(1e-13));
  CHECK(mutual.rho22 == doctest::Approx(0.018650583157446465).epsilon(1e-13));
  CHECK(mutual.rho33 == doctest::Approx(0.54103128294638222).epsilon(1e-13));
  CHECK(mutual.rho44 == doctest::Approx(0.43658801726468202).epsilon(1e-13));
  CHECK(mutual.rho23 == doctest::Approx(0.070311042039119215).epsilon(1e-13));

  const XState cascade =
      analytic_steady_state(dp, SecularForm::resonant_cascade);
  CHECK(cascade.rho11 == doctest::Approx(0.0033323543761174005).epsilon(1e-13));
  CHECK(cascade.rho22 == doctest::Approx(0.016661771880587003).epsilon(1e-13));
  CHECK(cascade.rho33 == doctest::Approx(0.4966676456238826).epsilon(1e-13));
  CHECK(cascade.rho44 == doctest::Approx(0.483338228119413).epsilon(1e-13));
  CHECK(cascade.rho23 == doctest::Approx(0.062813400163009345).epsilon(1e-13));
}

TEST_CASE("physical route reproduces the angle-parametrized closed form") {
  // Through SystemParams the same configuration must land on the same
  // steady state: reference geometry gives gamma12 = 2/pi exactly.
  SystemParams p = reference_resonant();
  const CollectiveCoupling cc = compute_u12(p);
  const DressedParams via_params = dressed_params(p, cc.gamma12);
  const DressedParams via_angle =
      dressed_params_from_angle(0.5, 1.0, 1.0, cc.gamma12);

  const XState a = analytic_steady_state(via_params, SecularForm::resonant_mutual);
  const XState b = analytic_steady_state(via_angle, SecularForm::resonant_mutual);
  CHECK(a.rho11 == doctest::Approx(b.rho11).epsilon(1e-15));
  CHECK(a.rho23 == doctest::Approx(b.rho23).epsilon(1e-15));
  CHECK(a.rho11 + a.rho22 + a.rho33 + a.rho44 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("decoupled steady state matches its generator's null space") {
  SystemParams p;
  p.rabi0 = 9.0;
  p.delta0 = 40.0;  // far off resonance
  p.deltaL = 2.0;
  p.gamma2 = 1.7;

  const Matrix16 g = build_secular_generator(p, SecularForm::off_resonance);
  const SteadyStateResult ss = steady_state(g, Tolerances{}, Basis::dressed);

  const CollectiveCoupling cc = compute_u12(p);
  const XState x = analytic_steady_state(dressed_params(p, cc.gamma12),
                                         SecularForm::off_resonance);
  CHECK((ss.rho - x.to_matrix()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(x.rho11 == 0.0);
  CHECK(x.rho23 == 0.0);
}

TEST_CASE("X state assembles into the expected matrix") {
  const XState x{0.1, 0.2, 0.3, 0.4, 0.05};
  const Matrix4 m = x.to_matrix();
  CHECK(m(0, 0) == Complex(0.1, 0.0));
  CHECK(m(1, 2) == Complex(0.05, 0.0));
  CHECK(m(2, 1) == Complex(0.05, 0.0));
  CHECK(m.trace() == Complex(1.0, 0.0));
  CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

}  // TEST_SUITE
