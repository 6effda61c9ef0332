#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "duet/collective_coupling.hpp"
#include "duet/dressed.hpp"
#include "duet/liouvillian.hpp"
#include "duet/solver.hpp"

using namespace duet;

TEST_SUITE("solver") {

TEST_CASE("bordered solve is deterministic and self-consistent") {
  SystemParams p;
  p.rabi0 = 15.0;
  p.delta0 = 15.0;
  const Matrix16 g = build_full_generator(p);

  const SteadyStateResult a = steady_state(g);
  const SteadyStateResult b = steady_state(g);
  CHECK((a.rho - b.rho).cwiseAbs().maxCoeff() == 0.0);  // bitwise repeatable

  CHECK(a.residual <= Tolerances{}.steady_residual);
  CHECK(a.hermitization <= Tolerances{}.hermitize_max);
  CHECK(a.condition < Tolerances{}.condition_max);
  CHECK(a.basis == Basis::bare);
  CHECK(std::abs(a.rho.trace() - Complex(1.0, 0.0)) < 1e-14);
}

TEST_CASE("steady state agrees with long-time evolution") {
  SystemParams p;
  p.rabi0 = 15.0;
  p.delta0 = 15.0;
  const Matrix16 g = build_full_generator(p);
  const SteadyStateResult ss = steady_state(g);

  Matrix4 rho0 = Matrix4::Zero();
  rho0(3, 3) = 1.0;  // start from the ground state
  const Matrix4 evolved = evolve(g, rho0, 50.0 / p.gamma1, 0.5);
  CHECK((evolved - ss.rho).cwiseAbs().maxCoeff() < 1e-7);
}

TEST_CASE("decoupled atoms decay exponentially") {
  SystemParams p;
  p.rabi0 = 0.0;
  p.gamma12_override = 0.0;
  const Matrix16 g = build_full_generator(p);

  Matrix4 rho0 = Matrix4::Zero();
  rho0(1, 1) = 1.0;  // |e1 g2>
  const Matrix4 rho = evolve(g, rho0, 1.0, 0.05);
  // Excited population of atom 1 relaxes as exp(-2 gamma1 t).
  CHECK(rho(1, 1).real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-8));
  CHECK(std::abs(rho.trace() - Complex(1.0, 0.0)) < 1e-9);
}

TEST_CASE("degenerate stationary manifold is rejected, not averaged") {
  // Maximal collective damping with no drive leaves the singlet dark: the
  // stationary state is not unique and the solver must say so.
  SystemParams p;
  p.rabi0 = 0.0;
  p.gamma12_override = 1.0;  // = sqrt(gamma1 gamma2)
  p.kr12 = 1e-3;             // near-contact geometry, no coherent shift issues
  p.cos2eta = 1.0 / 3.0;
  const Matrix16 g = build_full_generator(p);
  CHECK_THROWS_AS(steady_state(g), std::runtime_error);
}

TEST_CASE("secular steady state solves in the dressed basis") {
  SystemParams p;
  p.rabi0 = 15.0;
  p.delta0 = 15.0;
  const Matrix16 g = build_secular_generator(p, SecularForm::resonant_mutual);
  const SteadyStateResult ss = steady_state(g, Tolerances{}, Basis::dressed);
  CHECK(ss.basis == Basis::dressed);

  const CollectiveCoupling cc = compute_u12(p);
  const XState x = analytic_steady_state(dressed_params(p, cc.gamma12),
                                         SecularForm::resonant_mutual);
  CHECK((ss.rho - x.to_matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("evolve rejects unusable step bounds and stiff problems") {
  SystemParams p;
  p.rabi0 = 15.0;
  p.delta0 = 15.0;
  const Matrix16 g = build_full_generator(p);
  Matrix4 rho0 = Matrix4::Zero();
  rho0(3, 3) = 1.0;

  CHECK_THROWS_AS(evolve(g, rho0, 1.0, 0.0), std::invalid_argument);

  // A generator scaled far beyond the integrator's dynamic range must be
  // reported as stiff instead of silently looping or losing accuracy.
  const Matrix16 stiff = 1e16 * g;
  CHECK_THROWS_AS(evolve(stiff, rho0, 1.0, 1.0), std::runtime_error);
}

TEST_CASE("zero time evolution returns the initial state") {
  SystemParams p;
  const Matrix16 g = build_full_generator(p);
  Matrix4 rho0 = Matrix4::Zero();
  rho0(0, 0) = 0.5;
  rho0(3, 3) = 0.5;
  const Matrix4 rho = evolve(g, rho0, 0.0, 0.1);
  CHECK((rho - rho0).cwiseAbs().maxCoeff() == 0.0);
}

}  // TEST_SUITE
