#include "holomove/hyperbolic.hpp"

#include <cmath>

#include "holomove/errors.hpp"

namespace holomove::hyperbolic {

double hyp_dist_disk(complex z1, complex z2) {
  if (!(std::abs(z1) < 1.0) || !(std::abs(z2) < 1.0))
    throw domain_error("hyperbolic distance needs points inside the unit disk");
  const double r = std::abs(z1 - z2) / std::abs(1.0 - std::conj(z1) * z2);
  // log((1+r)/(1-r)) = 2 atanh(r), accurate for small r
  return 2.0 * std::atanh(r);
}

HyperbolicEstimate K_upper_bound(complex a, double R0) {
  if (!(R0 > 0.0) || !std::isfinite(R0)) throw input_error("R0 must be positive");
  if (!(std::abs(a) > R0)) throw domain_error("outside validated region; no bound emitted");
  const double k = R0 / std::abs(a);
  HyperbolicEstimate e{a, R0, hyp_dist_disk(0.0, k), 0.0};
  e.K_upper = std::exp(e.d_upper);
  return e;
}

}  // namespace holomove::hyperbolic
