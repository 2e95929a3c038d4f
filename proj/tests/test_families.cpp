#include "doctest.h"

#include <cmath>
#include <random>

#include "holomove/errors.hpp"
#include "holomove/families.hpp"

using namespace holomove;
using namespace holomove::families;
using namespace std::complex_literals;

namespace {

bool close(complex a, complex b, double tol) { return std::abs(a - b) <= tol; }

const complex z1_oracle = -2.08884301561304 + 7.46148928565425i;
const complex z2_oracle = -2.66406814242907 + 13.8790560027468i;
const complex z3_oracle = -3.02629695507788 + 20.2238349973304i;

complex random_in_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const complex z(u(rng), u(rng));
    if (std::norm(z) < 1.0) return radius * z;
  }
}

}  // namespace

TEST_CASE("entire family evaluation") {
  CHECK(eval_entire(EntireParam(1.0), 0.0) == complex(0.0, 0.0));
  CHECK(close(eval_entire(EntireParam(2.0), 1e-4), 1e-8, 1e-11));
  CHECK(std::abs(eval_entire(EntireParam(3.0 - 1i), z1_oracle)) < 1e-9);
  CHECK(is_infinite(eval_entire(EntireParam(1.0), 800.0 + 1i)));
  CHECK_THROWS_AS(EntireParam(0.0), domain_error);
}

TEST_CASE("entire core series and closed form agree across the switch radius") {
  for (double r : {0.49, 0.5, 0.51}) {
    for (int k = 0; k < 8; ++k) {
      const complex z = std::polar(r, 0.7 * k);
      const complex closed = std::exp(z) * (z - 1.0) + 1.0;
      CHECK(close(entire_core(z), closed, 1e-15));
      CHECK(close(entire_core_quotient(z) * z * z, closed, 1e-15));
      const complex dq_closed = (z * z * std::exp(z) - 2.0 * closed) / (z * z * z);
      CHECK(close(entire_core_quotient_derivative(z), dq_closed, 1e-12));
    }
  }
  CHECK(entire_core_quotient(0.0) == complex(0.5, 0.0));
  CHECK(close(entire_core_quotient_derivative(0.0), 1.0 / 3.0, 1e-16));
  CHECK(close(eval_entire_derivative(EntireParam(2.0), 1.0), 2.0 * std::exp(1.0), 1e-14));
}

TEST_CASE("rational families") {
  CHECK(eval_G(RationalParam(1.0, 0.0), 1.0) == complex(2.0, 0.0));
  CHECK(eval_G(RationalParam(0.5, 4.0), 1.0) == complex(8.0, 0.0));
  CHECK(is_infinite(eval_G(RationalParam(0.5, 4.0), 0.0)));
  CHECK(eval_G_derivative(RationalParam(0.3, 2.0), 1.0) == complex(0.0, 0.0));
  CHECK(eval_G_derivative(RationalParam(0.3, 2.0), -1.0) == complex(0.0, 0.0));
  CHECK(eval_R(0.3 + 0.2i, 1.0 - 2i, 0.0) == complex(0.0, 0.0));
  CHECK(eval_Q(0.0, 2.0) == complex(4.0, 0.0));
  for (complex z : {0.3 + 0.1i, -2.0 + 1i})
    CHECK(eval_blaschke(0.0, z) == z * z);
  CHECK_THROWS_AS(RationalParam(0.0, 1.0), domain_error);
}

TEST_CASE("stable quadratic solver") {
  const auto r = solve_quadratic(1.0, -1e8, 1.0);
  CHECK(close(r.first * r.second, 1.0, 1e-12));
  CHECK(std::min(std::abs(r.first), std::abs(r.second)) == doctest::Approx(1e-8).epsilon(1e-12));
  const auto lin = solve_quadratic(0.0, 2.0, -4.0);
  CHECK(lin.first == complex(2.0, 0.0));
  CHECK(is_infinite(lin.second));
}

TEST_CASE("fixed points and multiplier symmetric functions") {
  SUBCASE("sigma3 = sigma1 - 2 at a fixed sample") {
    const auto d = fixed_points_G(RationalParam(0.5, 1.0 + 1i));
    CHECK(close(d.sigma3, d.sigma1 - 2.0, 1e-9));
    CHECK(d.multipliers[0] == complex(0.5, 0.0));
    for (int k = 1; k <= 2; ++k) {
      const auto p = RationalParam(0.5, 1.0 + 1i);
      CHECK(close(eval_G(p, d.points[k]), d.points[k], 1e-12));
      CHECK(close(eval_G_derivative(p, d.points[k]), d.multipliers[k], 1e-12));
    }
  }
  SUBCASE("center parameter gives a superattracting fixed point") {
    const complex l = 0.3 - 0.2i;
    const auto d = fixed_points_G(RationalParam(l, (l - 2.0) * (l - 2.0)));
    CHECK(std::abs(d.multipliers[1] * d.multipliers[2]) < 1e-12);
  }
  SUBCASE("lambda = 1 collides a fixed point with infinity") {
    const auto d = fixed_points_G(RationalParam(1.0, 2.0));
    CHECK(d.collision_at_infinity);
    CHECK(close(d.sigma3, d.sigma1 - 2.0, 1e-12));
  }
  SUBCASE("random draws") {
    std::mt19937_64 rng(7);
    double worst_sigma = 0.0;
    double worst_product = 0.0;
    for (int n = 0; n < 1000; ++n) {
      const complex l = random_in_disk(rng, 1.0);
      const complex A = random_in_disk(rng, 10.0);
      const auto d = fixed_points_G(RationalParam(l, A));
      worst_sigma = std::max(worst_sigma, std::abs(d.sigma3 - (d.sigma1 - 2.0)));
      const complex prod = d.multipliers[1] * d.multipliers[2];
      worst_product = std::max(worst_product, std::abs(prod - sigma_of_A(l, A)) / std::max(1.0, std::abs(prod)));
    }
    CHECK(worst_sigma < 1e-9);
    CHECK(worst_product < 1e-8);
  }
}

TEST_CASE("sigma_of_A") {
  CHECK(sigma_of_A(1.0, 1.0) == complex(0.0, 0.0));
  CHECK(close(sigma_of_A(0.5, 2.0), 1.0, 1e-15));
  const double l = std::exp(-1.0);
  const complex expect = ((l - 2.0) * (l - 2.0) - 1.0) / (l * l);
  CHECK(close(sigma_of_A(l, 1.0), expect, 1e-14));
  const auto d = fixed_points_G(RationalParam(l, 1.0));
  CHECK(close(d.multipliers[1] * d.multipliers[2], expect, 1e-12));
  CHECK_THROWS_AS(sigma_of_A(0.0, 1.0), domain_error);

  // affine in A with slope -1/lambda^2
  const complex lam = 0.4 - 0.35i;
  const complex h = 1e-3;
  const complex slope = (sigma_of_A(lam, 2.0 + h) - sigma_of_A(lam, 2.0)) / h;
  CHECK(close(slope, -1.0 / (lam * lam), 1e-9));
}

TEST_CASE("mu and A relations") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    const complex l = random_in_disk(rng, 1.0);
    CHECK(close(A_of_mu(l, 0.0), (l - 2.0) * (l - 2.0), 1e-12));
    CHECK(close(A_of_mu(l, 1.0), 4.0 - 4.0 * l, 1e-12));

    const complex mu = random_in_disk(rng, 3.0);
    if (std::abs(1.0 - l * mu) < 1e-3) continue;
    const complex A = A_of_mu(l, mu);
    const auto sols = mu_of_A(l, A);
    const double err = std::min(std::abs(sols.first - mu), std::abs(sols.second - mu));
    CHECK(err < 1e-10 * std::max(1.0, std::abs(mu)));

    const complex sigma = mu * (2.0 - l - mu) / (1.0 - l * mu);
    CHECK(close(A, (l - 2.0) * (l - 2.0) - l * l * sigma, 1e-10));
  }
  const auto s = mu_of_A(0.5, 0.3);
  CHECK((s.first.real() < s.second.real() ||
         (s.first.real() == s.second.real() && s.first.imag() <= s.second.imag())));
  CHECK_THROWS_AS(A_of_mu(0.5, 2.0), domain_error);
}

TEST_CASE("degenerate mu quadratic is flagged") {
  // mu^2 - (2 - l + s l) mu + s has a double root when its discriminant
  // vanishes; pick the double root mu = 1 at l = 1/2: then s = 1 and the
  // linear coefficient is 2.
  const auto r = mu_of_A(0.5, 2.0);
  CHECK(r.degenerate);
  CHECK(close(r.first, 1.0, 1e-12));
  CHECK(r.first == r.second);
}

TEST_CASE("sigma of the quadratic family") {
  CHECK(sigma_quadratic(0.0) == complex(0.0, 0.0));
  CHECK(sigma_quadratic(0.25) == complex(1.0, 0.0));
  const complex c = -1.0;
  const auto r = solve_quadratic(1.0, -1.0, c);  // z^2 - z + c = 0
  CHECK(close((2.0 * r.first) * (2.0 * r.second), sigma_quadratic(c), 1e-14));
}

TEST_CASE("basin centers") {
  CHECK(basin_centers(0).ordered() == std::vector<complex>{0.0});
  const auto centers = basin_centers(5);
  CHECK(centers[0] == complex(0.0, 0.0));
  CHECK(close(centers[1], z1_oracle, 1e-12));
  CHECK(close(centers[2], z2_oracle, 1e-12));
  CHECK(close(centers[3], z3_oracle, 1e-12));
  CHECK(centers[-2] == std::conj(centers[2]));
  const auto all = centers.ordered();
  REQUIRE(all.size() == 11);
  for (std::size_t k = 1; k < all.size(); ++k) CHECK(all[k].imag() > all[k - 1].imag());
  for (complex z : all) {
    CHECK(std::abs(entire_core(z)) < 1e-10);
    for (complex a : {1.0 + 0i, 5.0 + 5i, 100.0 + 0i}) CHECK(std::abs(eval_entire(EntireParam(a), z)) < 1e-9);
  }
  CHECK_THROWS_AS(centers[6], input_error);
  CHECK_THROWS_AS(basin_centers(-1), input_error);
  CHECK(basin_centers(30).count() == 30);
}

TEST_CASE("orbit boundedness") {
  CHECK(orbit_bounded_Q(0.0, 0.0).kind == OrbitKind::bounded);
  CHECK(orbit_bounded_Q(0.0, 0.0).settled);
  const auto esc = orbit_bounded_Q(1.0, 0.0);
  CHECK(esc.kind == OrbitKind::escaped);
  CHECK(esc.steps == 3);  // 1, 2, 5

  const double l = std::exp(-1.0);
  const RationalParam origin(l, 0.0);
  CHECK(orbit_bounded_G(origin, 1.0).kind == OrbitKind::escaped);
  CHECK(orbit_bounded_G(origin, -1.0).kind == OrbitKind::escaped);
  CHECK_FALSE(in_connectedness_locus(origin));

  CHECK(in_connectedness_locus(RationalParam(l, (l - 2.0) * (l - 2.0))));
  CHECK(in_connectedness_locus(RationalParam(l, 4.0 - 4.0 * l)));

  // parabolic parameter: bounded at budget but never caught on a cycle
  const auto para = orbit_bounded_Q(0.25, 0.0);
  CHECK(para.kind == OrbitKind::bounded);
  CHECK_FALSE(para.settled);
}

TEST_CASE("square-root branch flip is a conjugacy") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    const complex l = random_in_disk(rng, 1.0);
    const complex A = random_in_disk(rng, 6.0);
    const RationalParam p(l, A);
    const RationalParam q = p.flipped();
    const auto dp = fixed_points_G(p);
    const auto dq = fixed_points_G(q);
    CHECK(std::abs(dp.multipliers[1] * dp.multipliers[2] - dq.multipliers[1] * dq.multipliers[2]) <
          1e-12 * std::max(1.0, std::abs(dp.multipliers[1] * dp.multipliers[2])));
    CHECK(in_connectedness_locus(p) == in_connectedness_locus(q));
    const complex z = random_in_disk(rng, 2.0);
    CHECK(close(eval_G(q, -z), -eval_G(p, z), 1e-12 * std::max(1.0, std::abs(eval_G(p, z)))));
  }
}
