#pragma once

// Hyperbolic distances in the unit disk and the dilatation bound
// K <= exp(d_U(inf, a)) for the motion of the immediate basin, using the
// disk {|l| > R0} around infinity as a subdomain of U.

#include "holomove/complex_kernel.hpp"

namespace holomove::hyperbolic {

/// log((1 + r) / (1 - r)) with r = |z1 - z2| / |1 - conj(z1) z2|.
/// Throws domain_error unless both points lie strictly inside the disk.
double hyp_dist_disk(complex z1, complex z2);

struct HyperbolicEstimate {
  complex a;
  double R0;
  double d_upper;  // upper bound for d_U(inf, a)
  double K_upper;  // exp(d_upper) = (1 + R0/|a|) / (1 - R0/|a|)
};

/// l -> R0/l maps {|l| > R0} onto the disk sending infinity to 0, so by
/// domain monotonicity d_U(inf, a) <= d_disk(0, R0/a). Throws domain_error
/// when |a| <= R0.
HyperbolicEstimate K_upper_bound(complex a, double R0);

}  // namespace holomove::hyperbolic
