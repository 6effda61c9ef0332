#include "duet/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "duet/collective_coupling.hpp"
#include "duet/dressed.hpp"
#include "duet/entanglement.hpp"
#include "duet/solver.hpp"
#include "duet/version.hpp"
#include "parallel.hpp"

namespace duet {

std::string to_string(Model model) {
  switch (model) {
    case Model::full: return "full";
    case Model::secular_mutual: return "secular_mutual";
    case Model::secular_cascade: return "secular_cascade";
  }
  return "unknown";
}

std::string to_string(SecularForm form) {
  switch (form) {
    case SecularForm::off_resonance: return "off_resonance";
    case SecularForm::resonant_mutual: return "resonant_mutual";
    case SecularForm::resonant_cascade: return "resonant_cascade";
  }
  return "unknown";
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("linspace: need at least one point");
  std::vector<double> xs(n);
  if (n == 1) {
    xs[0] = lo;
    return xs;
  }
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) xs[i] = lo + i * step;
  xs.back() = hi;
  return xs;
}

PeakReport find_peak(const std::vector<double>& xs,
                     const std::vector<double>& ys) {
  if (xs.empty() || xs.size() != ys.size())
    throw std::invalid_argument("find_peak: need matching non-empty grids");

  const int n = static_cast<int>(xs.size());
  int imax = 0;
  for (int i = 1; i < n; ++i)
    if (ys[i] > ys[imax]) imax = i;

  PeakReport peak;
  peak.grid_arg = xs[imax];
  peak.grid_value = ys[imax];
  peak.refined_arg = peak.grid_arg;
  peak.refined_value = peak.grid_value;

  if (imax > 0 && imax < n - 1) {
    const double ym = ys[imax - 1], y0 = ys[imax], yp = ys[imax + 1];
    const double curvature = ym - 2.0 * y0 + yp;
    if (curvature < -1e-300) {
      // Vertex of the parabola through the three top samples, clamped to
      // one grid step so a flat or noisy top cannot eject the estimate.
      double offset = 0.5 * (ym - yp) / curvature;
      offset = std::clamp(offset, -1.0, 1.0);
      const double h = xs[imax + 1] - xs[imax];
      peak.refined_arg = xs[imax] + offset * h;
      peak.refined_value = y0 - 0.25 * (ym - yp) * offset;
    }
  }
  return peak;
}

namespace {

double dressing_angle(double rabi0, double deltaL) {
  const double omega = std::hypot(rabi0, deltaL);
  if (omega > 0.0) return 0.5 + deltaL / (2.0 * omega);
  // rabi0 -> 0 limit of the angle at fixed deltaL.
  if (deltaL > 0.0) return 1.0;
  if (deltaL < 0.0) return 0.0;
  return 0.5;
}

void fill_from_xstate(SweepRow& row, const XState& x) {
  row.concurrence = concurrence_xstate(x);
  row.populations = {x.rho11, x.rho22, x.rho33, x.rho44};
  row.abs_rho23 = std::abs(x.rho23);
  row.residual = 0.0;
}

SweepRow eval_scan_row(const SystemParams& params, Model model,
                       const Tolerances& tol) {
  SweepRow row{};
  row.x0 = params.rabi0;
  row.x1 = 0.0;

  if (model == Model::full) {
    const Matrix16 g = build_full_generator(params);
    const SteadyStateResult ss = steady_state(g, tol, Basis::bare);
    row.concurrence = concurrence_general(ss.rho, tol);
    row.residual = ss.residual;

    // Report populations and the inner coherence in the dressed basis,
    // where the secular X structure lives (bare basis at zero drive, where
    // the dressing degenerates and the state is diagonal anyway).
    Matrix4 rho = ss.rho;
    if (std::hypot(params.rabi0, params.deltaL) > 0.0) {
      const Matrix4 u = dressed_basis_rotation(
          dressing_angle(params.rabi0, params.deltaL));
      rho = (u.adjoint() * ss.rho * u).eval();
    }
    for (int k = 0; k < 4; ++k) row.populations[k] = rho(k, k).real();
    row.abs_rho23 = std::abs(rho(1, 2));
    return row;
  }

  // Secular rows evaluate the closed-form X state at the local dressed
  // parameters; no linear solve involved.
  const CollectiveCoupling cc = compute_u12(params);
  const DressedParams dp = dressed_params_from_angle(
      dressing_angle(params.rabi0, params.deltaL), params.gamma1,
      params.gamma2, cc.gamma12);
  const SecularForm form = model == Model::secular_mutual
                               ? SecularForm::resonant_mutual
                               : SecularForm::resonant_cascade;
  fill_from_xstate(row, analytic_steady_state(dp, form));
  return row;
}

ScanResult run_scan(const ScanSpec& spec) {
  spec.base.validate();
  if (spec.points < 2)
    throw std::invalid_argument("scan: need at least two grid points");
  if (!(spec.rabi_max > spec.rabi_min) || spec.rabi_min < 0.0)
    throw std::invalid_argument("scan: need 0 <= rabi_min < rabi_max");

  ScanResult result;
  result.spec = spec;
  result.rows.resize(spec.points);

  const std::vector<double> xs =
      linspace(spec.rabi_min, spec.rabi_max, spec.points);

  detail::parallel_for(spec.points, spec.threads, [&](int i) {
    SystemParams p = spec.base;
    p.rabi0 = xs[i];
    result.rows[i] = eval_scan_row(p, spec.model, spec.tol);
  });

  std::vector<double> cs(spec.points);
  for (int i = 0; i < spec.points; ++i) cs[i] = result.rows[i].concurrence;
  result.peak = find_peak(xs, cs);

  // Saturation window: strong enough to dress the driven atom, weak enough
  // that the sideband stays clear of the undriven transition.
  const double lo = 2.0 * spec.base.gamma1;
  const double hi = 0.8 * spec.base.delta0;
  if (hi > lo) {
    double sum = 0.0, sum2 = 0.0;
    int count = 0;
    const double pad = 1e-12 * std::max(1.0, std::abs(hi));
    for (int i = 0; i < spec.points; ++i) {
      if (xs[i] >= lo - pad && xs[i] <= hi + pad) {
        sum += cs[i];
        sum2 += cs[i] * cs[i];
        ++count;
      }
    }
    if (count > 0) {
      PlateauReport plateau;
      plateau.lo = lo;
      plateau.hi = hi;
      plateau.mean = sum / count;
      plateau.stddev =
          std::sqrt(std::max(0.0, sum2 / count - plateau.mean * plateau.mean));
      plateau.count = count;
      result.plateau = plateau;
    }
  }

  // Drive strength that parks the dressed sideband on the undriven atom:
  // Omega = Delta with Omega^2 = rabi0^2 + deltaL^2.
  const double delta = spec.base.delta0 + spec.base.deltaL;
  if (delta > std::abs(spec.base.deltaL))
    result.expected_peak = std::sqrt(delta * delta -
                                     spec.base.deltaL * spec.base.deltaL);

  return result;
}

}  // namespace

ScanResult run_fig1_sweep(const ScanSpec& spec) { return run_scan(spec); }

ScanResult run_detuned_peak_scan(const ScanSpec& spec) {
  return run_scan(spec);
}

Fig2Result run_fig2_sweep(const Fig2Spec& spec) {
  if (spec.form == SecularForm::off_resonance)
    throw std::invalid_argument(
        "fig2: the rate-asymmetry surface needs a coupled variant");
  if (spec.points_per_axis < 2)
    throw std::invalid_argument("fig2: need at least two points per axis");
  if (!(spec.alpha_min < spec.alpha_max) || spec.alpha_min <= -1.0 ||
      spec.alpha_max >= 1.0)
    throw std::invalid_argument("fig2: alpha range must sit inside (-1, 1)");
  if (!(spec.c2_min < spec.c2_max) || spec.c2_min <= 0.0 || spec.c2_max >= 1.0)
    throw std::invalid_argument("fig2: cos^2 theta range must sit inside (0, 1)");

  const int n = spec.points_per_axis;
  const std::vector<double> alphas = linspace(spec.alpha_min, spec.alpha_max, n);
  const std::vector<double> c2s = linspace(spec.c2_min, spec.c2_max, n);

  Fig2Result result;
  result.spec = spec;
  result.rows.resize(static_cast<size_t>(n) * n);

  detail::parallel_for(n * n, spec.threads, [&](int idx) {
    const int ia = idx / n;
    const int ic = idx % n;
    const double alpha = alphas[ia];

    // Total decay budget is fixed (gamma1 + gamma2 = 2) so alpha only moves
    // the asymmetry; the collective rate follows the reference geometry.
    SystemParams p;
    p.gamma1 = 1.0 + alpha;
    p.gamma2 = 1.0 - alpha;
    const CollectiveCoupling cc = compute_u12(p);

    const DressedParams dp =
        dressed_params_from_angle(c2s[ic], p.gamma1, p.gamma2, cc.gamma12);

    SweepRow row{};
    row.x0 = alpha;
    row.x1 = c2s[ic];
    fill_from_xstate(row, analytic_steady_state(dp, spec.form));
    result.rows[idx] = row;
  });

  int best = 0;
  for (size_t i = 1; i < result.rows.size(); ++i)
    if (result.rows[i].concurrence > result.rows[best].concurrence)
      best = static_cast<int>(i);
  result.max_value = result.rows[best].concurrence;
  result.max_alpha = result.rows[best].x0;
  result.max_c2 = result.rows[best].x1;
  return result;
}

// -------------------------------------------------------------------- csv --

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(12) << v;
  return os.str();
}

std::string fmt_meta(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void write_params_meta(std::ostream& os, const SystemParams& p) {
  os << "# gamma1=" << fmt_meta(p.gamma1) << "\n";
  os << "# gamma2=" << fmt_meta(p.gamma2) << "\n";
  os << "# delta0=" << fmt_meta(p.delta0) << "\n";
  os << "# deltaL=" << fmt_meta(p.deltaL) << "\n";
  os << "# kr12=" << fmt_meta(p.kr12) << "\n";
  os << "# cos2eta=" << fmt_meta(p.cos2eta) << "\n";
  if (p.gamma12_override)
    os << "# gamma12_override=" << fmt_meta(*p.gamma12_override) << "\n";
}

void write_row(std::ostream& os, const SweepRow& row, bool two_coords) {
  os << fmt(row.x0);
  if (two_coords) os << "," << fmt(row.x1);
  os << "," << fmt(row.concurrence);
  for (double pop : row.populations) os << "," << fmt(pop);
  os << "," << fmt(row.abs_rho23) << "," << fmt(row.residual) << "\n";
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  return os;
}

}  // namespace

void write_scan_csv(const ScanResult& result, const std::string& path) {
  std::ofstream os = open_csv(path);
  os << "# duet " << kVersion << " scan\n";
  os << "# model=" << to_string(result.spec.model) << "\n";
  write_params_meta(os, result.spec.base);
  os << "# points=" << result.spec.points << "\n";
  os << "# rabi_min=" << fmt_meta(result.spec.rabi_min) << "\n";
  os << "# rabi_max=" << fmt_meta(result.spec.rabi_max) << "\n";
  os << "# peak_grid_arg=" << fmt_meta(result.peak.grid_arg) << "\n";
  os << "# peak_grid_value=" << fmt_meta(result.peak.grid_value) << "\n";
  os << "# peak_refined_arg=" << fmt_meta(result.peak.refined_arg) << "\n";
  os << "# peak_refined_value=" << fmt_meta(result.peak.refined_value) << "\n";
  if (result.plateau) {
    os << "# plateau_lo=" << fmt_meta(result.plateau->lo) << "\n";
    os << "# plateau_hi=" << fmt_meta(result.plateau->hi) << "\n";
    os << "# plateau_mean=" << fmt_meta(result.plateau->mean) << "\n";
    os << "# plateau_stddev=" << fmt_meta(result.plateau->stddev) << "\n";
  }
  if (result.expected_peak)
    os << "# expected_peak=" << fmt_meta(*result.expected_peak) << "\n";
  os << "rabi0,concurrence,pop_e1p,pop_e1m,pop_g1p,pop_g1m,abs_rho23,residual\n";
  for (const SweepRow& row : result.rows) write_row(os, row, false);
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

void write_fig2_csv(const Fig2Result& result, const std::string& path) {
  std::ofstream os = open_csv(path);
  os << "# duet " << kVersion << " rate-asymmetry surface\n";
  os << "# form=" << to_string(result.spec.form) << "\n";
  os << "# points_per_axis=" << result.spec.points_per_axis << "\n";
  os << "# alpha_min=" << fmt_meta(result.spec.alpha_min) << "\n";
  os << "# alpha_max=" << fmt_meta(result.spec.alpha_max) << "\n";
  os << "# c2_min=" << fmt_meta(result.spec.c2_min) << "\n";
  os << "# c2_max=" << fmt_meta(result.spec.c2_max) << "\n";
  os << "# max_value=" << fmt_meta(result.max_value) << "\n";
  os << "# max_alpha=" << fmt_meta(result.max_alpha) << "\n";
  os << "# max_c2=" << fmt_meta(result.max_c2) << "\n";
  os << "alpha,cos2theta,concurrence,pop_e1p,pop_e1m,pop_g1p,pop_g1m,"
        "abs_rho23,residual\n";
  for (const SweepRow& row : result.rows) write_row(os, row, true);
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace duet
