#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "holomove/errors.hpp"
#include "holomove/hyperbolic.hpp"

using namespace holomove;
using namespace holomove::hyperbolic;
using namespace std::complex_literals;

TEST_CASE("disk distance") {
  CHECK(hyp_dist_disk(0.0, 0.0) == 0.0);
  for (double r : {0.1, 0.5, 0.9})
    CHECK(hyp_dist_disk(0.0, r) == doctest::Approx(std::log((1 + r) / (1 - r))).epsilon(1e-14));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int k = 0; k < 100; ++k) {
    const complex a(u(rng), u(rng));
    const complex b(u(rng), u(rng));
    CHECK(hyp_dist_disk(a, b) == doctest::Approx(hyp_dist_disk(b, a)).epsilon(1e-13));
    // invariance under a disk automorphism
    const complex c = 0.3 - 0.2i;
    auto m = [&](complex z) { return (z - c) / (1.0 - std::conj(c) * z); };
    CHECK(hyp_dist_disk(m(a), m(b)) == doctest::Approx(hyp_dist_disk(a, b)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(hyp_dist_disk(1.0, 0.0), domain_error);
  CHECK_THROWS_AS(hyp_dist_disk(0.0, 1.5i), domain_error);
}

TEST_CASE("dilatation bound") {
  const double R0 = 4.9;
  CHECK(K_upper_bound(3.0 * R0, R0).K_upper == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(K_upper_bound(1e12, R0).K_upper == doctest::Approx(1.0).epsilon(1e-10));

  double previous = 1e300;
  for (double a : {6.0, 15.0, 30.0, 60.0, 1000.0}) {
    const auto e = K_upper_bound(a * std::exp(0.3i), R0);
    CHECK(e.K_upper < previous);
    previous = e.K_upper;
    const double k = R0 / a;
    CHECK(e.K_upper == doctest::Approx((1 + k) / (1 - k)).epsilon(1e-14));
    // exp and log each round once; the absolute error is a few ulp of K
    CHECK(std::abs(std::log(e.K_upper) - e.d_upper) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, e.d_upper));
  }
  CHECK_THROWS_AS(K_upper_bound(4.0, R0), domain_error);
  CHECK_THROWS_AS(K_upper_bound(R0, R0), domain_error);
}
