#pragma once

#include <Eigen/Dense>

#include "duet/system_params.hpp"
#include "duet/tolerances.hpp"
#include "duet/types.hpp"

namespace duet {

// Free + drive Hamiltonian in the frame rotating at the laser frequency
// (hbar = 1):
//
//   H0 = (delta0 + deltaL) S1z + deltaL S2z + (rabi0 / 2) (S2+ + S2-)
//
// Only atom 2 couples to the laser.
Matrix4 build_h0(const SystemParams& params);

// Coherent dipole-dipole exchange  Hd = omega12 (S1+ S2- + S2+ S1-).
Matrix4 build_hd(double omega12);

// Collective damping superoperator for the 2x2 rate matrix
// gammas = [[gamma11, gamma12], [gamma12, gamma22]]:
//
//   L(rho) = sum_ij gamma_ij ( 2 Sj- rho Si+ - Si+ Sj- rho - rho Si+ Sj- )
//
// With this normalization an isolated atom's excited population decays as
// exp(-2 gamma_ii t).  Throws std::invalid_argument unless gammas is
// symmetric positive semidefinite (within a small relative slack).
Matrix16 build_dissipator(const Eigen::Matrix2d& gammas);

// Full generator in the bare basis: -i [H0 + Hd, .] + dissipator, with the
// collective coupling computed from the geometry in params.
Matrix16 build_full_generator(const SystemParams& params);

// Secular (dressed-state) reductions, all expressed in the dressed basis.
//
//   off_resonance    - the two atoms decouple; atom 1 keeps its own decay
//                      channel and the driven atom keeps its three dressed
//                      channels, with no cross terms.
//   resonant_mutual  - the undriven transition is tuned to the dressed
//                      sideband (Omega = Delta) and photon exchange runs in
//                      both directions.
//   resonant_cascade - same resonance, but atom 1 only absorbs what the
//                      dressed atom emits (unidirectional coupling).
//
// The resonant variants require |Omega - Delta| <= resonance_rel * max(|Delta|, gamma1)
// and throw std::invalid_argument outside that window; they also require
// rabi0 > 0 so the dressing is defined.
enum class SecularForm { off_resonance, resonant_mutual, resonant_cascade };

Matrix16 build_secular_generator(const SystemParams& params, SecularForm form,
                                 const Tolerances& tol = {});

}  // namespace duet
