#include "holomove/applications.hpp"

#include <cmath>

#include "holomove/boettcher.hpp"
#include "holomove/errors.hpp"
#include "holomove/families.hpp"

namespace holomove::applications {

namespace {

using motion::MotionSample;

// Samples a motion around a = infinity on the circle |1/a| = 1/radius. The
// base a0 = radius sits at contour point 0.
template <class Provider>
ExplosionSource at_infinity(double radius, int samples, const std::vector<complex>& w, Provider&& value) {
  if (!(radius > 0.0)) throw input_error("radius must be positive");
  if (w.size() < 2) throw input_error("need at least two chart points");
  const CircleContour contour(0.0, 1.0 / radius, samples, Orientation::negative);
  ExplosionSource src{MotionSample{}, contour, w, 0, 1};
  MotionSample& m = src.sample;
  m.base_param = radius;
  m.marked_point = 0.0;
  m.marked_at_infinity = true;
  m.e_connected = true;  // points of one simply connected component
  for (int k = 0; k < samples; ++k) m.param_points.push_back(k == 0 ? complex(radius) : 1.0 / contour.point(k));

  std::vector<basin::BoettcherChart> charts;
  charts.reserve(m.param_points.size());
  for (complex a : m.param_points) charts.emplace_back(a);
  for (complex wi : w) m.E_points.push_back(value(charts[0], wi));
  for (const auto& chart : charts)
    for (complex wi : w) m.values.push_back(value(chart, wi));
  const auto pivots = motion::farthest_pivots(m.E_points);
  src.pivot0 = pivots.first;
  src.pivot1 = pivots.second;
  return src;
}

}  // namespace

const std::vector<complex>& default_chart_points() {
  static const std::vector<complex> w{0.0, 0.1, complex(0.0, 0.3), complex(-0.2, 0.15), complex(0.25, -0.1)};
  return w;
}

ExplosionSource immediate_basin_source(double radius, int samples, const std::vector<complex>& w) {
  return at_infinity(radius, samples, w,
                     [](const basin::BoettcherChart& chart, complex wi) { return chart.psi(wi); });
}

ExplosionSource preimage_source(int i, double radius, int samples, const std::vector<complex>& w) {
  if (i == 0) throw input_error("preimage component index must be nonzero");
  const complex center = families::basin_centers(std::abs(i))[i];
  return at_infinity(radius, samples, w, [center](const basin::BoettcherChart& chart, complex wi) {
    return basin::preimage_motion(chart, center, wi);
  });
}

complex period_two_center_sigma(complex lambda) {
  const complex d = 1.0 + lambda;
  if (d == complex(0.0, 0.0)) throw domain_error("period-two center undefined at lambda = -1");
  return (lambda * lambda - 2.0 * lambda - 4.0) / (d * d);
}

ExplosionSource per1_special_source(int samples) {
  const double base = std::exp(-1.0);
  const CircleContour contour(0.0, base, samples, Orientation::negative);
  const std::vector<complex> E{0.0, 1.0, period_two_center_sigma(base)};
  auto m = motion::sample_motion(contour, base, 0.0, E, true, [](complex l, std::size_t i) {
    return i == 0 ? complex(0.0) : (i == 1 ? complex(1.0) : period_two_center_sigma(l));
  });
  m.param_points[0] = base;
  m.values[2] = E[2];
  return ExplosionSource{std::move(m), contour, {}, 0, 1};
}

}  // namespace holomove::applications
