#pragma once

#include <array>

#include "duet/liouvillian.hpp"
#include "duet/system_params.hpp"
#include "duet/types.hpp"

namespace duet {

// Semiclassical dressing of the driven atom.  With generalized Rabi
// frequency Omega = sqrt(rabi0^2 + deltaL^2) the dressed pair is
//
//   |+> =  cos(theta) |e2> + sin(theta) |g2>,
//   |-> =  sin(theta) |e2> - cos(theta) |g2>,   cos^2(theta) = 1/2 + deltaL / (2 Omega),
//
// and spontaneous emission of the driven atom splits into three channels:
// a dephasing-like channel on Rz and the two sideband channels R-/R+.
//
// Decomposing S2- over the dressed operators gives S2- = cos^2(theta) R-
// - sin^2(theta) R+ + sin(2 theta) Rz, so with Rz = (|+><+| - |-><-|)/2 the
// Rz channel carries the full sin^2(2 theta) weight:
//
//   gamma0     = gamma2 sin^2(2 theta)        (spectral-center channel)
//   gamma_plus = gamma2 cos^4(theta)          (emission  |+> -> |->)
//   gamma_minus= gamma2 sin^4(theta)          (emission  |-> -> |+>)
//
// which satisfy gamma_plus + gamma_minus + gamma0 / 2 = gamma2.  The
// collective rate dressing only keeps the component resonant with the
// undriven atom: gamma_bar12 = gamma12 cos^2(theta).
struct DressedParams {
  double omega;        // generalized Rabi frequency (> 0)
  double delta;        // delta0 + deltaL, detuning of atom 1 in the rotating frame
  double cos2theta;    // cos^2(theta) in [0, 1]
  double gamma1;       // decay rate of the undriven atom
  double gamma0;       // Rz channel rate
  double gamma_plus;   // R- channel rate
  double gamma_minus;  // R+ channel rate
  double gamma_bar12;  // dressed collective rate
  double gamma_total;  // gamma1 + gamma0 + gamma_plus + gamma_minus
};

// Builds the dressed parameters from the physical configuration and a
// collective damping rate (usually compute_u12(params).gamma12).  Throws
// std::invalid_argument when rabi0 = deltaL = 0 (dressing undefined).
DressedParams dressed_params(const SystemParams& params, double gamma12);

// Rates-only construction for scans parametrized directly by the dressing
// angle; the energy fields omega/delta are set to zero and must not be used.
DressedParams dressed_params_from_angle(double cos2theta, double gamma1,
                                        double gamma2, double gamma12);

// Rotating-frame energies of {|e1 +>, |e1 ->, |g1 +>, |g1 ->}:
// { (delta+omega)/2, (delta-omega)/2, (omega-delta)/2, -(delta+omega)/2 }.
// The middle pair degenerates exactly at the sideband resonance omega = delta.
std::array<double, 4> dressed_energies(const DressedParams& dp);

// Unitary with the dressed product states as columns, so
// rho_dressed = U^dagger rho_bare U.  Self-inverse (U = U^dagger = U^-1).
Matrix4 dressed_basis_rotation(double cos2theta);

// Steady state of the secular models.  In the dressed basis every variant
// relaxes to an X-shaped state: diagonal populations plus one real coherence
// between |e1 -> and |g1 +> (zero for the decoupled variant).
struct XState {
  double rho11;  // |e1 +>
  double rho22;  // |e1 ->
  double rho33;  // |g1 +>
  double rho44;  // |g1 ->
  double rho23;  // real coherence <e1 -| rho |g1 +>

  Matrix4 to_matrix() const;
};

// Closed-form steady state for the given variant.  Throws std::logic_error
// if the resulting populations or coherence violate physicality beyond
// rounding (an internal-consistency failure, never clamped away).
XState analytic_steady_state(const DressedParams& dp, SecularForm form);

}  // namespace duet
