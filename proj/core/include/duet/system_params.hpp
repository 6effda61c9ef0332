#pragma once

#include <numbers>
#include <optional>

namespace duet {

// Physical configuration of the pair: two nonidentical two-level atoms at
// fixed separation, with atom 2 driven by a cw laser.  All frequencies and
// rates are in units of gamma1 unless the caller chooses otherwise; the
// library never assumes a particular unit, only ratios.
//
// Sign conventions: delta0 = omega1 - omega2 (bare atomic mismatch) and
// deltaL = omega2 - omega_L (laser detuning from the driven atom), so the
// undriven atom sits at delta0 + deltaL in the frame rotating with the laser.
struct SystemParams {
  double gamma1 = 1.0;   // half relaxation rate of atom 1 (undriven)
  double gamma2 = 1.0;   // half relaxation rate of atom 2 (driven)
  double rabi0 = 0.0;    // resonant Rabi frequency Omega_0 of the drive
  double delta0 = 0.0;   // omega1 - omega2
  double deltaL = 0.0;   // omega2 - omega_L
  double kr12 = std::numbers::pi / 2;  // dimensionless separation k * r12
  double cos2eta = 1.0 / 3.0;  // cos^2 of the angle between dipoles and r12

  // When set, replaces the geometric collective decay rate gamma12 while
  // keeping the coherent shift from the same geometry.  Intended for
  // sensitivity studies only.
  std::optional<double> gamma12_override;

  // Throws std::invalid_argument on non-positive rates, negative rabi0 or
  // kr12, or cos2eta outside [0, 1].
  void validate() const;
};

}  // namespace duet
