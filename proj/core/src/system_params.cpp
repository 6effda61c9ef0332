#include "duet/system_params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace duet {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("SystemParams: " + what);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void SystemParams::validate() const {
  require(finite(gamma1) && gamma1 > 0.0, "gamma1 must be positive");
  require(finite(gamma2) && gamma2 > 0.0, "gamma2 must be positive");
  require(finite(rabi0) && rabi0 >= 0.0, "rabi0 must be non-negative");
  require(finite(delta0), "delta0 must be finite");
  require(finite(deltaL), "deltaL must be finite");
  require(finite(kr12) && kr12 > 0.0, "kr12 must be positive");
  require(finite(cos2eta) && cos2eta >= 0.0 && cos2eta <= 1.0,
          "cos2eta must lie in [0, 1]");
  if (gamma12_override) {
    const double bound = std::sqrt(gamma1 * gamma2);
    require(finite(*gamma12_override) &&
                std::abs(*gamma12_override) <= bound,
            "gamma12 override must satisfy |gamma12| <= sqrt(gamma1 gamma2)");
  }
}

}  // namespace duet
