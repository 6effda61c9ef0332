#pragma once

#include <complex>

#include <Eigen/Dense>

namespace duet {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector16 = Eigen::Matrix<Complex, 16, 1>;
using Matrix16 = Eigen::Matrix<Complex, 16, 16>;

// Basis a two-qubit state is expressed in.  "bare" is the product basis
// {|e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>}; "dressed" replaces the driven atom's
// {|e2>, |g2>} by the semiclassical dressed pair {|+>, |->}, giving
// {|e1 +>, |e1 ->, |g1 +>, |g1 ->}.
enum class Basis { bare, dressed };

// Column-stacking vectorization: vec(rho)(4*col + row) = rho(row, col), so
// the superoperator of rho -> A rho B is kron(B^T, A).
Vector16 vec(const Matrix4& rho);
Matrix4 unvec(const Vector16& v);

Matrix16 kron(const Matrix4& a, const Matrix4& b);

// Superoperator building blocks, all acting on vec(rho).
Matrix16 left_mult(const Matrix4& a);                     // rho -> a rho
Matrix16 right_mult(const Matrix4& b);                    // rho -> rho b
Matrix16 sandwich(const Matrix4& a, const Matrix4& b);    // rho -> a rho b

struct DensityCheck {
  double hermiticity;     // ||rho - rho^dagger||_inf (max abs entry)
  double trace_error;     // |tr(rho) - 1|
  double min_eigenvalue;  // smallest eigenvalue of the Hermitized matrix
};

DensityCheck check_density_matrix(const Matrix4& rho);

}  // namespace duet
