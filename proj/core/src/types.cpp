#include "duet/types.hpp"

namespace duet {

Vector16 vec(const Matrix4& rho) {
  Vector16 v;
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row) v(4 * col + row) = rho(row, col);
  return v;
}

Matrix4 unvec(const Vector16& v) {
  Matrix4 rho;
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row) rho(row, col) = v(4 * col + row);
  return rho;
}

Matrix16 kron(const Matrix4& a, const Matrix4& b) {
  Matrix16 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return out;
}

Matrix16 left_mult(const Matrix4& a) { return kron(Matrix4::Identity(), a); }

Matrix16 right_mult(const Matrix4& b) {
  return kron(b.transpose(), Matrix4::Identity());
}

Matrix16 sandwich(const Matrix4& a, const Matrix4& b) {
  return kron(b.transpose(), a);
}

DensityCheck check_density_matrix(const Matrix4& rho) {
  DensityCheck out;
  out.hermiticity = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  out.trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
  const Matrix4 herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4> es(herm);
  out.min_eigenvalue = es.eigenvalues().minCoeff();
  return out;
}

}  // namespace duet
