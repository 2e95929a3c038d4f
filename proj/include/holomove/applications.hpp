#pragma once

// Sampled motions from the two worked families, ready for the explosion
// pipeline:
//   * the immediate basin of 0 for f_a moving over a large circle |a| = R,
//     H(a, z) = psi_a(phi_a0(z)), exploding at a = infinity;
//   * its preimage components around the centers z_i;
//   * the multiplier-product motion across Per_1(l) for G_{l,A}, with the
//     constant center (0) and root (1) trajectories and the period-two center.

#include <vector>

#include "holomove/motion_lab.hpp"

namespace holomove::applications {

struct ExplosionSource {
  motion::MotionSample sample;
  /// Contour in the coordinate the decomposition works in (1/a when the
  /// puncture is at infinity).
  CircleContour contour;
  /// Boettcher coordinates of the moved points, when applicable.
  std::vector<complex> chart_points;
  /// Pivot pair the construction is meant to be read with.
  std::size_t pivot0 = 0;
  std::size_t pivot1 = 1;
};

/// Chart points w used by default; includes w = 0.
const std::vector<complex>& default_chart_points();

/// Basin motion sampled on |a| = radius with base a0 = radius.
ExplosionSource immediate_basin_source(double radius = 100.0, int samples = 256,
                                       const std::vector<complex>& w = default_chart_points());

/// Motion of the preimage component around z_i (i != 0).
ExplosionSource preimage_source(int i, double radius = 100.0, int samples = 256,
                                const std::vector<complex>& w = default_chart_points());

/// Multiplier product of the finite fixed points of G_{l,A} when the critical
/// point 1 has period two: (l^2 - 2l - 4) / (1 + l)^2, tending to 4 * (-1).
complex period_two_center_sigma(complex lambda);

/// Trajectories 0, 1 and the period-two center over |l| = 1/e with base
/// point 1/e, puncture 0; pivots are 0 and 1.
ExplosionSource per1_special_source(int samples = 256);

}  // namespace holomove::applications
