#include "duet/validate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "duet/collective_coupling.hpp"
#include "duet/dressed.hpp"
#include "duet/entanglement.hpp"
#include "duet/liouvillian.hpp"
#include "duet/solver.hpp"
#include "parallel.hpp"

namespace duet {

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

using Rng = std::mt19937_64;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

// Configuration with the dressed sideband exactly on the undriven atom:
// pick the dressing angle and generalized Rabi frequency, then solve for
// the detunings that realize them.
SystemParams random_resonant(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SystemParams p;
  p.gamma1 = 0.3 + 2.7 * u(rng);
  p.gamma2 = 0.3 + 2.7 * u(rng);
  const double c2 = 0.05 + 0.9 * u(rng);
  const double omega = 1.0 + 19.0 * u(rng);
  p.deltaL = (2.0 * c2 - 1.0) * omega;
  p.rabi0 = std::sqrt(std::max(0.0, omega * omega - p.deltaL * p.deltaL));
  p.delta0 = omega - p.deltaL;  // Delta = delta0 + deltaL = Omega
  const double q = 0.1 + 0.8 * u(rng);
  p.gamma12_override = q * std::sqrt(p.gamma1 * p.gamma2);
  return p;
}

XState random_xstate(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::exponential_distribution<double> e(1.0);
  double pops[4];
  double sum = 0.0;
  for (double& pop : pops) {
    pop = e(rng) + 1e-9;
    sum += pop;
  }
  XState x;
  x.rho11 = pops[0] / sum;
  x.rho22 = pops[1] / sum;
  x.rho33 = pops[2] / sum;
  x.rho44 = pops[3] / sum;
  x.rho23 = (2.0 * u(rng) - 1.0) * 0.999 * std::sqrt(x.rho22 * x.rho33);
  return x;
}

Matrix2 random_unitary2(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  using namespace std::complex_literals;
  const double a = std::numbers::pi * u(rng);
  const double b = 2.0 * std::numbers::pi * u(rng);
  const double c = 2.0 * std::numbers::pi * u(rng);
  Matrix2 m;
  m << std::cos(a) * std::exp(1i * b), std::sin(a) * std::exp(1i * c),
      -std::sin(a) * std::exp(-1i * c), std::cos(a) * std::exp(-1i * b);
  return m;
}

Matrix4 kron2(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Matrix4 random_density(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = Complex(n(rng), n(rng));
  Matrix4 rho = a * a.adjoint();
  rho /= rho.trace().real();
  return rho;
}

CheckResult secular_vs_analytic(SecularForm form, int threads,
                                const Tolerances& tol) {
  constexpr int kDraws = 100;
  constexpr double kBound = 1e-10;
  Rng rng(form == SecularForm::resonant_mutual ? 0x6d757475616cull
                                               : 0x63617363616465ull);
  std::vector<SystemParams> draws(kDraws);
  for (SystemParams& p : draws) p = random_resonant(rng);

  std::vector<double> gaps(kDraws);
  detail::parallel_for(kDraws, threads, [&](int i) {
    const SystemParams& p = draws[i];
    const SteadyStateResult ss =
        steady_state(build_secular_generator(p, form, tol), tol, Basis::dressed);
    const CollectiveCoupling cc = compute_u12(p);
    const Matrix4 closed =
        analytic_steady_state(dressed_params(p, cc.gamma12), form).to_matrix();
    gaps[i] = (ss.rho - closed).cwiseAbs().maxCoeff();
  });

  CheckResult out;
  out.name = form == SecularForm::resonant_mutual ? "secular_vs_analytic_mutual"
                                                  : "secular_vs_analytic_cascade";
  out.measured = *std::max_element(gaps.begin(), gaps.end());
  out.bound = kBound;
  out.pass = out.measured <= kBound;
  out.detail = "max elementwise gap, null space vs closed form, " +
               std::to_string(kDraws) + " random resonant configurations";
  return out;
}

CheckResult concurrence_equivalence(int threads, const Tolerances& tol) {
  constexpr int kDraws = 1000;
  constexpr double kBound = 1e-12;
  Rng rng(0x78737461746573ull);
  std::vector<XState> draws(kDraws);
  for (XState& x : draws) x = random_xstate(rng);

  std::vector<double> gaps(kDraws);
  detail::parallel_for(kDraws, threads, [&](int i) {
    gaps[i] = std::abs(concurrence_xstate(draws[i]) -
                       concurrence_general(draws[i].to_matrix(), tol));
  });

  CheckResult out;
  out.name = "concurrence_equivalence";
  out.measured = *std::max_element(gaps.begin(), gaps.end());
  out.bound = kBound;
  out.pass = out.measured <= kBound;
  out.detail = "X-state formula vs general spin-flip algorithm, " +
               std::to_string(kDraws) + " random X states";
  return out;
}

CheckResult local_unitary_invariance(int threads, const Tolerances& tol) {
  constexpr int kDraws = 100;
  constexpr double kBound = 1e-10;
  Rng rng(0x756e6974617279ull);
  std::vector<Matrix4> rhos(kDraws), us(kDraws);
  for (int i = 0; i < kDraws; ++i) {
    rhos[i] = random_density(rng);
    us[i] = kron2(random_unitary2(rng), random_unitary2(rng));
  }

  std::vector<double> gaps(kDraws);
  detail::parallel_for(kDraws, threads, [&](int i) {
    const Matrix4 rotated = us[i] * rhos[i] * us[i].adjoint();
    gaps[i] = std::abs(concurrence_general(rhos[i], tol) -
                       concurrence_general(rotated, tol));
  });

  CheckResult out;
  out.name = "local_unitary_invariance";
  out.measured = *std::max_element(gaps.begin(), gaps.end());
  out.bound = kBound;
  out.pass = out.measured <= kBound;
  out.detail = "concurrence drift under random U1 x U2, " +
               std::to_string(kDraws) + " random mixed states";
  return out;
}

CheckResult decomposition_reconstruction() {
  constexpr int kDraws = 200;
  constexpr double kBound = 1e-12;
  Rng rng(0x6465636f6d70ull);

  double worst = 0.0;
  int used = 0;
  for (int i = 0; i < kDraws; ++i) {
    const XState x = random_xstate(rng);
    const double g = std::hypot(x.rho22 - x.rho33, 2.0 * x.rho23);
    if (g < 1e-8) continue;  // decomposition intentionally rejects these
    ++used;
    const EntangledDecomposition dec = entangled_decomposition(x);
    const double c2 = dec.cos2phi;
    const double s2 = 1.0 - c2;
    const double cs = x.rho23 / dec.g;  // sin(phi) carries the coherence sign
    const double r22 = dec.weight_1 * c2 + dec.weight_2 * s2;
    const double r33 = dec.weight_1 * s2 + dec.weight_2 * c2;
    const double r23 = (dec.weight_1 - dec.weight_2) * cs;
    worst = std::max({worst, std::abs(r22 - x.rho22), std::abs(r33 - x.rho33),
                      std::abs(r23 - x.rho23)});
  }

  CheckResult out;
  out.name = "decomposition_reconstruction";
  out.measured = worst;
  out.bound = kBound;
  out.pass = out.measured <= kBound;
  out.detail = "two-term decomposition rebuilds the inner block, " +
               std::to_string(used) + " of " + std::to_string(kDraws) +
               " random X states";
  return out;
}

CheckResult full_vs_secular_convergence(const Tolerances& tol) {
  const double detunings[] = {25.0, 50.0, 100.0, 200.0};
  constexpr double kBound = 0.02;

  double prev = std::numeric_limits<double>::infinity();
  bool monotone = true;
  double last = 0.0;
  std::ostringstream detail;
  detail << "dressed-basis gap at delta0 = {25, 50, 100, 200}:";

  for (const double d0 : detunings) {
    SystemParams p;
    p.rabi0 = d0;  // deltaL = 0, so Omega = rabi0 = Delta = delta0
    p.delta0 = d0;

    const SteadyStateResult ss =
        steady_state(build_full_generator(p), tol, Basis::bare);
    const Matrix4 u = dressed_basis_rotation(0.5);
    const Matrix4 dressed = u.adjoint() * ss.rho * u;

    const CollectiveCoupling cc = compute_u12(p);
    const Matrix4 closed =
        analytic_steady_state(dressed_params(p, cc.gamma12),
                              SecularForm::resonant_mutual)
            .to_matrix();

    const double gap = (dressed - closed).cwiseAbs().maxCoeff();
    detail << " " << fmt(gap);
    if (gap >= prev) monotone = false;
    prev = gap;
    last = gap;
  }

  CheckResult out;
  out.name = "full_vs_secular_convergence";
  out.measured = last;
  out.bound = kBound;
  out.pass = monotone && last <= kBound;
  out.detail = detail.str() + (monotone ? " (monotone)" : " (NOT monotone)");
  return out;
}

CheckResult off_resonance_decoupling(const Tolerances& tol) {
  constexpr double kBound = 0.01;
  SystemParams p;
  p.delta0 = 100.0;
  p.rabi0 = 50.0;  // sideband at 50, undriven atom at 100: far detuned

  const SteadyStateResult ss =
      steady_state(build_full_generator(p), tol, Basis::bare);
  const double c = concurrence_general(ss.rho, tol);
  const double pop1 = (ss.rho(0, 0) + ss.rho(1, 1)).real();

  CheckResult out;
  out.name = "off_resonance_decoupling";
  out.measured = std::max(c, pop1);
  out.bound = kBound;
  out.pass = out.measured <= kBound;
  out.detail =
      "concurrence " + fmt(c) + ", undriven-atom population " + fmt(pop1);
  return out;
}

CheckResult steady_state_physicality(int threads, const Tolerances& tol) {
  constexpr int kDraws = 50;
  Rng rng(0x70687973ull);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  std::vector<SystemParams> draws(kDraws);
  for (SystemParams& p : draws) {
    p.gamma1 = 1.0;
    p.gamma2 = 0.5 + 3.5 * u(rng);
    p.rabi0 = 0.5 + 29.5 * u(rng);
    p.delta0 = -30.0 + 60.0 * u(rng);
    p.deltaL = -5.0 + 10.0 * u(rng);
    p.kr12 = 0.4 + 5.6 * u(rng);
    p.cos2eta = u(rng);
  }

  std::vector<double> min_eigs(kDraws);
  std::vector<std::string> failures(kDraws);
  detail::parallel_for(kDraws, threads, [&](int i) {
    try {
      const SteadyStateResult ss =
          steady_state(build_full_generator(draws[i]), tol, Basis::bare);
      min_eigs[i] = check_density_matrix(ss.rho).min_eigenvalue;
    } catch (const std::exception& ex) {
      min_eigs[i] = -1.0;
      failures[i] = ex.what();
    }
  });

  CheckResult out;
  out.name = "steady_state_physicality";
  out.measured = *std::min_element(min_eigs.begin(), min_eigs.end());
  out.bound = tol.positivity_floor;
  out.pass = out.measured >= tol.positivity_floor;
  out.detail = "worst minimum eigenvalue over " + std::to_string(kDraws) +
               " random full-model steady states";
  for (const std::string& f : failures)
    if (!f.empty()) {
      out.detail += "; solver failure: " + f;
      out.pass = false;
      break;
    }
  return out;
}

}  // namespace

ValidationReport run_validation_suite(int threads, const Tolerances& tol) {
  ValidationReport report;
  report.checks.push_back(
      secular_vs_analytic(SecularForm::resonant_mutual, threads, tol));
  report.checks.push_back(
      secular_vs_analytic(SecularForm::resonant_cascade, threads, tol));
  report.checks.push_back(concurrence_equivalence(threads, tol));
  report.checks.push_back(local_unitary_invariance(threads, tol));
  report.checks.push_back(decomposition_reconstruction());
  report.checks.push_back(full_vs_secular_convergence(tol));
  report.checks.push_back(off_resonance_decoupling(tol));
  report.checks.push_back(steady_state_physicality(threads, tol));
  return report;
}

}  // namespace duet
