#pragma once

#include <complex>

#include "duet/system_params.hpp"

namespace duet {

// Photon-exchange coupling between the two atoms, mediated by the shared
// radiation field.  The complex amplitude u12 splits into a coherent
// dipole-dipole shift omega12 = Re(u12) and a collective damping rate
// gamma12 = -Im(u12).
struct CollectiveCoupling {
  std::complex<double> u12;
  double omega12;
  double gamma12;
};

// Retarded dipole-dipole amplitude for two linear dipoles a distance r12
// apart, both tilted by the same angle eta from the interatomic axis:
//
//   u12 = -(3/2) sqrt(gamma1 gamma2) * exp(i k r12)
//         * { (1 - cos^2 eta) / (k r12)
//           + (1 - 3 cos^2 eta) * [ i/(k r12)^2 - 1/(k r12)^3 ] }
//
// At the reference geometry k r12 = pi/2, cos^2 eta = 1/3 the near-field
// terms drop out and u12 = -i (2/pi) sqrt(gamma1 gamma2): no coherent shift,
// purely collective damping.
//
// Honors params.gamma12_override for the damping part (the coherent shift
// always comes from the geometry).  Throws std::invalid_argument when
// kr12 <= 0 or an override would make the damping matrix non-physical,
// i.e. |gamma12| > sqrt(gamma1 gamma2).
CollectiveCoupling compute_u12(const SystemParams& params);

}  // namespace duet
