#pragma once

#include "duet/dressed.hpp"
#include "duet/tolerances.hpp"
#include "duet/types.hpp"

namespace duet {

// Wootters concurrence of an arbitrary two-qubit density matrix:
// C = max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of the
// eigenvalues of rho (sigma_y x sigma_y) rho* (sigma_y x sigma_y), computed
// through the Hermitian-equivalent form sqrt(rho) rho_tilde sqrt(rho).
//
// The input must be a density matrix within tol (Hermiticity, unit trace,
// positivity); violations throw std::invalid_argument.  Invariant under
// local unitaries, so it gives the same value in the bare and dressed bases.
double concurrence_general(const Matrix4& rho, const Tolerances& tol = {});

// Concurrence of an X state: C = 2 max(0, |rho23| - sqrt(rho11 rho44)).
double concurrence_xstate(const XState& x);

// Two-term decomposition of the inner 2x2 block of an X state into
// orthogonal pure states
//
//   |phi_1> = cos(phi) |e1 -> + sin(phi) |g1 +>,
//   |phi_2> = sin(phi) |e1 -> - cos(phi) |g1 +>,
//
// with cos^2(phi) = 1/2 + d / (2 g), d = rho22 - rho33 and
// g = sqrt(d^2 + 4 rho23^2); the weights are (rho22 + rho33 +/- g) / 2.
// Throws std::invalid_argument when g vanishes (block fully mixed, the
// decomposition is not unique).
struct EntangledDecomposition {
  double cos2phi;
  double weight_1;  // population of |phi_1>
  double weight_2;  // population of |phi_2>
  double d;         // rho22 - rho33
  double g;         // sqrt(d^2 + 4 rho23^2)
};

EntangledDecomposition entangled_decomposition(const XState& x);

}  // namespace duet
