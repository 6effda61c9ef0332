#include "duet/liouvillian.hpp"

#include <cmath>
#include <stdexcept>

#include "duet/collective_coupling.hpp"
#include "duet/dressed.hpp"
#include "duet/operator_set.hpp"

namespace duet {

namespace {

using namespace std::complex_literals;

// -i [h, rho] as a superoperator.
Matrix16 commutator(const Matrix4& h) {
  return -1i * (left_mult(h) - right_mult(h));
}

// rate * ( 2 jump rho jump^dag - jump^dag jump rho - rho jump^dag jump ).
Matrix16 lindblad(double rate, const Matrix4& jump) {
  const Matrix4 jdj = jump.adjoint() * jump;
  return rate *
         (2.0 * sandwich(jump, jump.adjoint()) - left_mult(jdj) - right_mult(jdj));
}

}  // namespace

Matrix4 build_h0(const SystemParams& params) {
  params.validate();
  const OperatorSet ops = OperatorSet::bare();
  return (params.delta0 + params.deltaL) * ops.s1z + params.deltaL * ops.s2z +
         0.5 * params.rabi0 * (ops.s2p + ops.s2m);
}

Matrix4 build_hd(double omega12) {
  const OperatorSet ops = OperatorSet::bare();
  return omega12 * (ops.s1p * ops.s2m + ops.s2p * ops.s1m);
}

Matrix16 build_dissipator(const Eigen::Matrix2d& gammas) {
  const double scale = gammas.cwiseAbs().maxCoeff();
  const double slack = 1e-12 * std::max(scale, 1.0);
  if (std::abs(gammas(0, 1) - gammas(1, 0)) > slack)
    throw std::invalid_argument("build_dissipator: rate matrix not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(gammas);
  if (es.eigenvalues().minCoeff() < -slack)
    throw std::invalid_argument(
        "build_dissipator: rate matrix not positive semidefinite");

  const OperatorSet ops = OperatorSet::bare();
  const Matrix4 sp[2] = {ops.s1p, ops.s2p};
  const Matrix4 sm[2] = {ops.s1m, ops.s2m};

  Matrix16 l = Matrix16::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Matrix4 spm = sp[i] * sm[j];
      l += gammas(i, j) *
           (2.0 * sandwich(sm[j], sp[i]) - left_mult(spm) - right_mult(spm));
    }
  }
  return l;
}

Matrix16 build_full_generator(const SystemParams& params) {
  params.validate();
  const CollectiveCoupling cc = compute_u12(params);
  const Matrix4 h = build_h0(params) + build_hd(cc.omega12);

  Eigen::Matrix2d gammas;
  gammas << params.gamma1, cc.gamma12, cc.gamma12, params.gamma2;
  return commutator(h) + build_dissipator(gammas);
}

Matrix16 build_secular_generator(const SystemParams& params, SecularForm form,
                                 const Tolerances& tol) {
  params.validate();
  const CollectiveCoupling cc = compute_u12(params);
  const DressedParams dp = dressed_params(params, cc.gamma12);

  if (form != SecularForm::off_resonance) {
    if (!(params.rabi0 > 0.0))
      throw std::invalid_argument(
          "build_secular_generator: resonant forms require rabi0 > 0");
    const double scale = std::max(std::abs(dp.delta), params.gamma1);
    if (std::abs(dp.omega - dp.delta) > tol.resonance_rel * scale)
      throw std::invalid_argument(
          "build_secular_generator: resonant forms require the sideband "
          "resonance Omega = Delta (|Omega - Delta| outside the guard window)");
  }

  const OperatorSet ops = OperatorSet::dressed();

  // Coherent part: both the undriven transition and the dressed doublet are
  // diagonal in this basis; at resonance the |e1 -> / |g1 +> pair is exactly
  // degenerate, which is what lets their coherence survive the secular
  // average.
  Matrix4 h = Matrix4::Zero();
  const std::array<double, 4> e = dressed_energies(dp);
  for (int k = 0; k < 4; ++k) h(k, k) = e[k];

  Matrix16 g = commutator(h);
  g += lindblad(dp.gamma1, ops.s1m);
  g += lindblad(dp.gamma0, ops.rz);
  g += lindblad(dp.gamma_plus, ops.rm);
  g += lindblad(dp.gamma_minus, ops.rp);

  // Cross damping: photon exchange between the undriven transition and the
  // co-rotating dressed sideband.
  const double gb = dp.gamma_bar12;
  const Matrix4 s1p_rm = ops.s1p * ops.rm;   // = rm * s1p (different atoms)
  const Matrix4 rp_s1m = s1p_rm.adjoint();

  switch (form) {
    case SecularForm::off_resonance:
      break;
    case SecularForm::resonant_mutual:
      // gb ( [rho S1+, R-] + [S1+, R- rho] ) + H.c.
      g += gb * (right_mult(s1p_rm) + left_mult(s1p_rm) -
                 2.0 * sandwich(ops.rm, ops.s1p));
      g += gb * (left_mult(rp_s1m) + right_mult(rp_s1m) -
                 2.0 * sandwich(ops.s1m, ops.rp));
      break;
    case SecularForm::resonant_cascade:
      // gb ( [S1+, R- rho] + [rho R+, S1-] ): emission from the dressed
      // sideband feeds atom 1, with no back-action on the dressed pair.
      g += gb * (left_mult(s1p_rm) - sandwich(ops.rm, ops.s1p));
      g += gb * (right_mult(rp_s1m) - sandwich(ops.s1m, ops.rp));
      break;
  }
  return g;
}

}  // namespace duet
