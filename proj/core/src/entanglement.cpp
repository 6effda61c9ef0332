#include "duet/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace duet {

namespace {

// sigma_y x sigma_y is real: antidiagonal (-1, 1, 1, -1).
Matrix4 spin_flip_kernel() {
  Matrix4 yy = Matrix4::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy;
}

// Positive square root of a Hermitian PSD matrix, clamping eigenvalue dust.
Matrix4 psd_sqrt(const Matrix4& m) {
  Eigen::SelfAdjointEigenSolver<Matrix4> es(m);
  Eigen::Vector4d vals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * vals.asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

double concurrence_general(const Matrix4& rho, const Tolerances& tol) {
  const DensityCheck chk = check_density_matrix(rho);
  if (chk.hermiticity > tol.density_herm || chk.trace_error > tol.density_trace ||
      chk.min_eigenvalue < tol.positivity_floor) {
    std::ostringstream msg;
    msg << "concurrence_general: input is not a density matrix (hermiticity "
        << chk.hermiticity << ", trace error " << chk.trace_error
        << ", min eigenvalue " << chk.min_eigenvalue << ")";
    throw std::invalid_argument(msg.str());
  }

  const Matrix4 herm = 0.5 * (rho + rho.adjoint());
  const Matrix4 yy = spin_flip_kernel();
  const Matrix4 tilde = yy * herm.conjugate() * yy;

  // Eigenvalues of rho * tilde are real and non-negative; computing them
  // through sqrt(rho) tilde sqrt(rho) keeps the problem Hermitian.
  const Matrix4 root = psd_sqrt(herm);
  Matrix4 m = root * tilde * root;
  m = 0.5 * (m + m.adjoint());

  Eigen::SelfAdjointEigenSolver<Matrix4> es(m);
  Eigen::Vector4d lambdas = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(lambdas.data(), lambdas.data() + 4, std::greater<double>());
  return std::max(0.0, lambdas(0) - lambdas(1) - lambdas(2) - lambdas(3));
}

double concurrence_xstate(const XState& x) {
  const double geometric =
      std::sqrt(std::max(x.rho11, 0.0) * std::max(x.rho44, 0.0));
  return 2.0 * std::max(0.0, std::abs(x.rho23) - geometric);
}

EntangledDecomposition entangled_decomposition(const XState& x) {
  EntangledDecomposition out;
  out.d = x.rho22 - x.rho33;
  out.g = std::hypot(out.d, 2.0 * x.rho23);
  if (out.g < 1e-15)
    throw std::invalid_argument(
        "entangled_decomposition: inner block is fully mixed, the "
        "decomposition is not unique");
  out.cos2phi = 0.5 + out.d / (2.0 * out.g);
  out.weight_1 = 0.5 * (x.rho22 + x.rho33 + out.g);
  out.weight_2 = 0.5 * (x.rho22 + x.rho33 - out.g);
  return out;
}

}  // namespace duet
