#include "duet/collective_coupling.hpp"

#include <cmath>
#include <complex>

namespace duet {

CollectiveCoupling compute_u12(const SystemParams& params) {
  params.validate();
  using namespace std::complex_literals;

  const double x = params.kr12;
  const double c2 = params.cos2eta;

  // Far field falls off as 1/(kr); the 1/(kr)^2 and 1/(kr)^3 near-field
  // pieces carry the (1 - 3 cos^2 eta) anisotropy and cancel at the magic
  // angle cos^2 eta = 1/3.
  const std::complex<double> envelope =
      (1.0 - c2) / x + (1.0 - 3.0 * c2) * (1i / (x * x) - 1.0 / (x * x * x));
  const std::complex<double> u12 = -1.5 * std::sqrt(params.gamma1 * params.gamma2) *
                                   envelope * std::exp(1i * x);

  CollectiveCoupling out;
  out.omega12 = u12.real();
  out.gamma12 = -u12.imag();
  if (params.gamma12_override) out.gamma12 = *params.gamma12_override;
  out.u12 = {out.omega12, -out.gamma12};
  return out;
}

}  // namespace duet
