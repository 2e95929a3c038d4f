#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "holomove/boettcher.hpp"
#include "holomove/errors.hpp"

using namespace holomove;
using namespace holomove::basin;
using namespace std::complex_literals;

namespace {

bool close(complex a, complex b, double tol) { return std::abs(a - b) <= tol; }

std::vector<complex> chart_points(const BoettcherChart& chart, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.0, 0.8);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<complex> out;
  for (int k = 0; k < count; ++k) out.push_back(chart.psi(std::polar(radius(rng), angle(rng))));
  return out;
}

}  // namespace

TEST_CASE("orbit fates") {
  const EntireParam p(6.0);
  CHECK(orbit_fate(p, 0.0).fate == Fate::attracted);
  CHECK(orbit_fate(p, 0.01).fate == Fate::attracted);
  CHECK(orbit_fate(p, 3.0).fate == Fate::escaped);
  CHECK(orbit_fate(EntireParam(0.5), 0.5).fate == Fate::attracted);
}

TEST_CASE("contraction disk") {
  for (complex a : {0.5 + 0i, 6.0 + 0i, 20i, 100.0 + 0i}) {
    const double rho = contraction_radius(a);
    for (int k = 0; k < 32; ++k) {
      const complex z = std::polar(rho, 0.2 * k);
      CHECK(std::abs(families::eval_entire(EntireParam(a), z)) <= 0.5 * rho);
    }
  }
}

TEST_CASE("Boettcher coordinate normalization") {
  CHECK(boettcher_coordinate(4.0, 0.0) == complex(0.0, 0.0));
  CHECK(close(boettcher_coordinate(4.0, 1e-6), 2e-6, 1e-11));

  for (complex a : {6.0 + 0i, 10.0 + 4i, 40.0 + 0i}) {
    const BoettcherChart chart(a);
    const double h = 1e-5;
    const complex fd = (chart.phi(h) - chart.phi(-h)) / (2.0 * h);
    CHECK(close(fd, 0.5 * a, 1e-6));
    CHECK(chart.phi_jet(0.0).derivative == 0.5 * a);
  }
}

TEST_CASE("functional equation phi(f(z)) = phi(z)^2") {
  const BoettcherChart six(6.0);
  const complex z = 0.05;
  const complex fz = families::eval_entire(EntireParam(6.0), z);
  CHECK(std::abs(six.phi(fz) - six.phi(z) * six.phi(z)) < 1e-8);

  for (complex a : {6.0 + 0i, 10.0 + 4i, 40.0 + 0i, 20i}) {
    const BoettcherChart chart(a);
    for (complex p : chart_points(chart, 50, 17)) {
      const complex fp = families::eval_entire(EntireParam(a), p);
      CHECK(std::abs(chart.phi(fp) - chart.phi(p) * chart.phi(p)) < 1e-8);
    }
  }
}

TEST_CASE("phi derivative agrees with finite differences away from 0") {
  const BoettcherChart chart(10.0 + 4i);
  for (complex w : {0.3 + 0i, 0.5i, -0.6 + 0.3i}) {
    const complex z = chart.psi(w);
    const double h = 1e-6 * std::abs(z);
    const complex fd = (chart.phi(z + h) - chart.phi(z - h)) / (2.0 * h);
    CHECK(close(chart.phi_jet(z).derivative, fd, 1e-6 * std::abs(fd)));
  }
}

TEST_CASE("Boettcher parameter inverts the coordinate") {
  CHECK(boettcher_parameter(6.0, 0.0) == complex(0.0, 0.0));
  const BoettcherChart chart(6.0);
  CHECK(std::abs(chart.phi(chart.psi(0.3)) - 0.3) < 1e-9);
  for (int k = 0; k < 16; ++k) {
    const complex w = std::polar(0.8, 2.0 * std::numbers::pi * k / 16);
    CHECK(std::abs(chart.phi(chart.psi(w)) - w) < 1e-9);
  }
  const double h = 1e-6;
  CHECK(close((chart.psi(h) - chart.psi(-h)) / (2.0 * h), 2.0 / 6.0, 1e-6));
  CHECK_THROWS_AS(chart.psi(0.9), domain_error);
}

TEST_CASE("phi rejects points outside the basin") {
  const BoettcherChart chart(6.0);
  CHECK_THROWS_AS(chart.phi(3.0), numerical_error);
  CHECK_THROWS_AS(BoettcherChart(0.0), domain_error);
}

TEST_CASE("main hyperbolic component") {
  CHECK(in_C0(16.33 + 1.866i) == C0Verdict::outside);
  CHECK(in_C0(3.7 + 0.5i) == C0Verdict::outside);
  CHECK(in_C0(0.5) == C0Verdict::inside);
  CHECK(in_C0(20.0) == C0Verdict::outside);
}

TEST_CASE("basin grid labels the immediate basin") {
  const Window w{-1.0, 1.0, -1.0, 1.0};
  const auto g = basin_grid(6.0, w, 64, 64);
  REQUIRE(g.immediate >= 0);
  const auto [oc, orow] = w.pixel_of(0.0, 64, 64);
  CHECK(g.in_immediate_basin(oc, orow));
  const auto [ec, er] = w.pixel_of(0.9, 64, 64);
  CHECK_FALSE(g.in_immediate_basin(ec, er));
  const auto g4 = basin_grid(6.0, w, 64, 64, {}, 4);
  CHECK(g4.fates == g.fates);
  CHECK(g4.component == g.component);
}

TEST_CASE("motion of the immediate basin") {
  const double a0 = 6.0;
  for (complex z : {0.01 + 0i, 0.05i, -0.03 + 0.02i})
    CHECK(close(motion_H(a0, a0, z), z, 1e-10));

  for (complex a : {8.0 + 0i, 20i, 50.0 + 0i}) {
    const BoettcherChart base(a0);
    const BoettcherChart target(a);
    const double h = 1e-6;
    const complex d = (motion_H(base, target, h) - motion_H(base, target, -h)) / (2.0 * h);
    CHECK(std::abs(d - a0 / a) <= 1e-6 * std::abs(a0 / a));

    // vertical injectivity on sampled pairs
    const auto pts = chart_points(base, 15, 5);
    std::vector<complex> images;
    for (complex p : pts) images.push_back(motion_H(base, target, p));
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j) CHECK(images[i] != images[j]);
  }
}

TEST_CASE("explosion factorization and Koebe bound") {
  CHECK(hat_H(20.0, 0.0) == complex(0.0, 0.0));
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> radius(0.0, 0.8);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (complex a : {20.0 + 0i, 100.0 + 0i}) {
    const BoettcherChart chart(a);
    for (int k = 0; k < 50; ++k) {
      const complex w = std::polar(radius(rng), angle(rng));
      const complex hh = hat_H(chart, w);
      const double r = std::abs(w);
      CHECK(std::abs(hh) <= r / ((1.0 - r) * (1.0 - r)));
      CHECK(std::abs(chart.psi(w) - (2.0 / a) * hh) < 1e-12);
    }
  }
}

TEST_CASE("normalized motion tends to the identity") {
  double previous = 1e9;
  for (double a : {50.0, 100.0, 200.0}) {
    const BoettcherChart chart(a);
    double sup = 0.0;
    for (int k = 0; k < 24; ++k)
      for (double r : {0.25, 0.5}) {
        const complex w = std::polar(r, 2.0 * std::numbers::pi * k / 24);
        sup = std::max(sup, std::abs(hat_H(chart, w) - w));
      }
    CHECK(sup < previous);
    previous = sup;
  }
}

TEST_CASE("preimage motion") {
  const auto centers = families::basin_centers(2);
  for (double a : {50.0, 200.0}) {
    for (int i : {-1, 1, 2}) {
      CHECK(preimage_motion(a, centers, i, 0.0) == centers[i]);
      const complex z = preimage_motion(a, centers, i, 0.3);
      const complex image = families::eval_entire(EntireParam(a), z);
      CHECK(close(image, explosion_H(a, 0.3), 1e-12));
      CHECK(std::abs(z - centers[i]) < 1e-3);
    }
  }
  CHECK_THROWS_AS(preimage_motion(50.0, centers, 0, 0.1), input_error);
}

TEST_CASE("g_a approaches z^2 within the bound") {
  CHECK(std::abs(g_a(10.0, 0.5) - 0.25) <= g_a_error_bound(10.0, 0.5));
  CHECK(g_a(10.0, 0.0) == complex(0.0, 0.0));
  CHECK(g_a_error_bound(10.0, 0.0) == 0.0);
  CHECK(g_a_error_bound(100.0, 0.5) < g_a_error_bound(10.0, 0.5));
  CHECK(g_a_error_bound(1000.0, 0.5) < g_a_error_bound(100.0, 0.5));
  for (complex a : {10.0 + 0i, 7.0 - 3i, 40i})
    for (complex z : {0.5 + 0i, 0.3 - 0.4i, -1.0 + 0i})
      CHECK(std::abs(g_a(a, z) - z * z) <= g_a_error_bound(a, z));
}
