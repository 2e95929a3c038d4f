#include "doctest.h"

#include <cmath>
#include <numbers>

#include "holomove/errors.hpp"
#include "holomove/motion_lab.hpp"

using namespace holomove;
using namespace holomove::motion;
using namespace std::complex_literals;

namespace {

const double e = std::numbers::e;
const double inv_e = 1.0 / std::numbers::e;

bool close(complex a, complex b, double tol) { return std::abs(a - b) <= tol; }

// H = f + g z with f(l0) = 0 and g(l0) = 1
template <class F, class G>
MotionSample affine_sample(const CircleContour& c, std::vector<complex> E, F f, G g) {
  return sample_motion(c, c.point(0), c.center(), E, true,
                       [&](complex l, std::size_t i) { return f(l) + g(l) * E[i]; });
}

}  // namespace

TEST_CASE("motion validity") {
  const CircleContour c(0.0, 0.5, 16);
  const std::vector<complex> E{0.0, 1.0, 2.0i};
  auto m = affine_sample(c, E, [&](complex l) { return l - c.point(0); },
                         [&](complex l) { return 1.0 + 0.3 * (l - c.point(0)); });
  CHECK(validate_motion(m).clean());

  auto broken = m;
  broken.at(0, 1) += 1e-3;
  const auto r1 = validate_motion(broken);
  REQUIRE_FALSE(r1.clean());
  CHECK(r1.violations.front().kind == ViolationKind::base_row);

  auto collapsed = m;
  collapsed.at(3, 2) = collapsed.at(3, 0);
  const auto r2 = validate_motion(collapsed);
  REQUIRE_FALSE(r2.clean());
  CHECK(r2.violations.front().kind == ViolationKind::injectivity);
  CHECK(r2.violations.front().row == 3);
}

TEST_CASE("Cauchy-Riemann spot check") {
  CHECK(cauchy_riemann_residual([](complex l) { return std::exp(l) * l; }, 0.3 + 0.1i) < 1e-8);
  CHECK(cauchy_riemann_residual([](complex l) { return std::conj(l); }, 0.3 + 0.1i) > 0.5);
}

TEST_CASE("normalization through two pivots") {
  const CircleContour c(0.0, 0.25, 32);
  SUBCASE("pivot rows become constant") {
    const std::vector<complex> E{0.0, 1.0, 0.5i};
    auto m = sample_motion(c, c.point(0), 0.0, E, true, [&](complex l, std::size_t i) {
      return E[i] + 0.2 * (l - c.point(0)) * E[i] * E[i] + (l - c.point(0));
    });
    const auto t = normalize_tilde(m, 0, 1);
    for (std::size_t j = 0; j < t.rows(); ++j) {
      CHECK(t.at(j, 0) == E[0]);
      CHECK(t.at(j, 1) == E[1]);
    }
  }
  SUBCASE("identity stays identity") {
    const std::vector<complex> E{-1.0, 1.0, 0.3i};
    auto m = sample_motion(c, c.point(0), 0.0, E, true, [&](complex, std::size_t i) { return E[i]; });
    CHECK(normalize_tilde(m, 0, 1) == m);
  }
  SUBCASE("gallery G: trajectories 0, l, l^2") {
    const CircleContour cg(0.0, inv_e, 32);
    const std::vector<complex> E{0.0, inv_e, inv_e * inv_e};
    auto m = sample_motion(cg, cg.point(0), 0.0, E, false, [](complex l, std::size_t i) {
      return i == 0 ? complex(0.0) : (i == 1 ? l : l * l);
    });
    const auto t = normalize_tilde(m, 0, 1);
    for (std::size_t j = 0; j < t.rows(); ++j) CHECK(close(t.at(j, 2), t.param_points[j] * inv_e, 1e-15));
  }
  CHECK_THROWS_AS(normalize_tilde(MotionSample{0.0, {0.0}, 0.0, false, {0.0, 1.0}, true, {0.0, 1.0}}, 1, 1),
                  input_error);
}

TEST_CASE("f and g extraction") {
  const CircleContour c(0.1, 0.4, 64);
  const complex l0 = c.point(0);
  auto fs = [&](complex l) { return std::sin(l - l0) * (1.0 + 1i); };
  auto gs = [&](complex l) { return std::exp(0.7 * (l - l0)); };
  const std::vector<complex> E{0.0, 1.0, -0.4 + 0.9i, 2.0};
  const auto m = affine_sample(c, E, fs, gs);
  const auto fg = extract_fg(m, 0, 3);
  CHECK(fg.f[0] == complex(0.0, 0.0));
  CHECK(fg.g[0] == complex(1.0, 0.0));
  const auto t = normalize_tilde(m, 0, 3);
  for (std::size_t j = 0; j < m.rows(); ++j) {
    CHECK(close(fg.f[j], fs(m.param_points[j]), 1e-12));
    CHECK(close(fg.g[j], gs(m.param_points[j]), 1e-12));
    for (std::size_t i = 0; i < m.cols(); ++i)
      CHECK(close(m.at(j, i), fg.f[j] + fg.g[j] * t.at(j, i), 1e-12));
  }
}

TEST_CASE("classification of single trajectories") {
  const CircleContour c(0.0, 0.25, 256, Orientation::negative);

  const auto pole = classify_extension(sample_on(c, [](complex l) { return 1.0 / l; }), c, 0.0, inv_e);
  CHECK(pole.kind == ExtensionKind::pole);
  CHECK(pole.order == 1);
  CHECK(pole.winding == 1);
  CHECK(pole.describe() == "pole(1)");

  const auto hol = classify_extension(sample_on(c, [](complex l) { return l * l; }), c, 0.0, inv_e);
  CHECK(hol.kind == ExtensionKind::holomorphic);
  CHECK(std::abs(hol.limit) < 1e-12);
  CHECK(hol.winding == 0);

  const auto pole3 = classify_extension(
      sample_on(c.reversed(), [](complex l) { return 2.0 + std::pow(l, -3) + l; }), c.reversed(), 0.0, 1.0);
  CHECK(pole3.kind == ExtensionKind::pole);
  CHECK(pole3.order == 3);

  const CircleContour small(0.0, 0.05, 256, Orientation::negative);
  const double l0 = 0.5;
  const auto ess = classify_extension(
      sample_on(small, [&](complex l) { return std::exp(1.0 / l) - std::exp(1.0 / l0) + 0.3; }), small, 0.0,
      1.0);
  CHECK(ess.kind == ExtensionKind::essential);
  CHECK(ess.n_max == 32);
  CHECK(ess.describe() == "essential_up_to(32)");
}

TEST_CASE("gallery H: disconnected E with a polar trajectory") {
  const CircleContour c(0.0, 0.25, 256, Orientation::negative);
  const std::vector<complex> E{0.0, inv_e, e};
  std::vector<ExtendabilityVerdict> verdicts;
  const std::vector<std::function<complex(complex)>> traj{
      [](complex) { return complex(0.0); }, [](complex) { return complex(inv_e); },
      [](complex l) { return 1.0 / l; }};
  for (const auto& t : traj) verdicts.push_back(classify_extension(sample_on(c, t), c, E[0], E[1]));
  CHECK(verdicts[0].kind == ExtensionKind::holomorphic);
  CHECK(verdicts[1].kind == ExtensionKind::holomorphic);
  CHECK(verdicts[2].kind == ExtensionKind::pole);
  CHECK(verdicts[2].order == 1);
}

TEST_CASE("gallery G: holomorphic trajectories with a collapsing limit row") {
  const CircleContour c(0.0, inv_e, 256, Orientation::negative);
  const std::vector<complex> E{0.0, inv_e, inv_e * inv_e};
  auto m = sample_motion(c, c.point(0), 0.0, E, false, [](complex l, std::size_t i) {
    return i == 0 ? complex(0.0) : (i == 1 ? l : l * l);
  });
  CHECK(validate_motion(m).clean());
  std::vector<complex> limits;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto v = classify_extension(m.trajectory(i), c, E[0], E[1]);
    CHECK(v.kind == ExtensionKind::holomorphic);
    limits.push_back(v.limit);
  }
  const auto inj = check_row_injective(limits);
  CHECK_FALSE(inj.injective);
  CHECK(inj.min_separation < 1e-12);
  CHECK_THROWS_AS(decompose_explosion(m, c), input_error);
}

TEST_CASE("inconsistent evidence is reported") {
  // 1/l + 10 has a simple pole but also takes both target values inside the
  // contour, so the winding count (poles minus zeros) cannot confirm the pole
  const CircleContour c(0.0, 0.25, 64, Orientation::negative);
  const auto values = sample_on(c, [](complex l) { return 1.0 / l + 10.0; });
  CHECK_THROWS_AS(classify_extension(values, c, 0.0, 1.0), numerical_error);
}

TEST_CASE("synthetic explosion of order 2") {
  const complex l0 = 0.3;
  const CircleContour c(0.0, 0.3, 256);
  auto fs = [&](complex l) { return l - l0; };
  auto gs = [&](complex l) { return (l / l0) * (l / l0); };
  const std::vector<complex> E{0.0, 1.0, 0.5 + 0.5i, -1.0, 0.2i};
  const auto m = affine_sample(c, E, fs, gs);
  REQUIRE(validate_motion(m).clean());

  const auto d = decompose_explosion(m, c);
  CHECK(d.order == 2);
  REQUIRE(d.P.degree() == 1);
  CHECK(close(d.P.coefficients()[0], -l0, 1e-8));
  CHECK(close(d.P.coefficients()[1], 1.0, 1e-8));
  CHECK(d.residual < 1e-10);
  for (std::size_t i = 0; i < E.size(); ++i) {
    CHECK(close(d.hatH.E_points[i], E[i] / (l0 * l0), 1e-10));
    CHECK(close(d.limits[i], -l0, 1e-10));
  }
  CHECK(validate_motion(d.hatH).clean());
  const auto cv = corollary_classify(d);
  CHECK(cv.kind == CorollaryKind::explosion_to);
  CHECK(close(cv.z_star, -l0, 1e-10));

  // pivot independence
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{0, 1}, {2, 4}, {3, 1}}) {
    const auto alt = decompose_explosion(m, c, a, b);
    CHECK(alt.order == d.order);
    for (int k = 0; k <= d.P.degree(); ++k)
      CHECK(close(alt.P.coefficients()[k], d.P.coefficients()[k], 1e-6));
  }
}

TEST_CASE("synthetic motion extension") {
  const complex l0 = 0.3;
  const CircleContour c(0.0, 0.3, 128, Orientation::negative);
  const std::vector<complex> E{0.0, 1.0, 0.5i};
  const auto m = affine_sample(c, E, [&](complex l) { return l - l0; },
                               [&](complex l) { return 1.0 + 0.5 * (l - l0); });
  const auto d = decompose_explosion(m, c);
  CHECK(d.order == 0);
  CHECK(d.P.degree() == -1);
  CHECK(corollary_classify(d).kind == CorollaryKind::motion_extension);
}

TEST_CASE("puncture at infinity through inverted coordinates") {
  // H(a, z) = (2/a) z + (1/a^2) z^2 around a = infinity, base a0 = 10
  const double a0 = 10.0;
  const CircleContour c(0.0, 1.0 / a0, 128);
  MotionSample m;
  m.marked_at_infinity = true;
  m.e_connected = true;
  const auto pts = contour_points(c);
  auto H = [&](complex a, complex w) { return 2.0 * w / a + w * w / (a * a); };
  const std::vector<complex> ws{0.1, -0.25 + 0.05i, 0.15i};
  for (complex w : ws) m.E_points.push_back(H(a0, w));
  m.base_param = a0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const complex a = k == 0 ? complex(a0) : 1.0 / pts[k];
    m.param_points.push_back(a);
    for (complex w : ws) m.values.push_back(k == 0 ? H(a0, w) : H(a, w));
  }
  REQUIRE(validate_motion(m).clean());
  const auto d = decompose_explosion(m, c);
  CHECK(d.inverted);
  CHECK(d.order == 1);
  for (std::size_t i = 0; i < ws.size(); ++i) CHECK(close(d.hatH.E_points[i], 2.0 * ws[i], 1e-10));
  CHECK(corollary_classify(d).kind == CorollaryKind::explosion_to);
}

TEST_CASE("affinity over the plane") {
  std::vector<complex> params{0.0};
  for (double R : {1.0, 2.0, 4.0, 8.0})
    for (int k = 0; k < 8; ++k) params.push_back(std::polar(R, 2.0 * std::numbers::pi * k / 8));
  const std::vector<complex> E{-1.0, 1.0, 0.3i, 0.2};
  auto build = [&](auto H) {
    MotionSample m;
    m.base_param = 0.0;
    m.E_points = E;
    m.param_points = params;
    for (complex l : params)
      for (complex z : E) m.values.push_back(H(l, z));
    return m;
  };
  const std::vector<double> radii{1.0, 2.0, 4.0, 8.0};

  const auto affine = check_affine_over_plane(
      build([](complex l, complex z) { return l * l + std::exp(0.3 * l) * z; }), radii);
  for (double dev : affine.deviation) CHECK(dev < 1e-12);

  const auto identity = check_affine_over_plane(build([](complex, complex z) { return z; }), radii);
  for (double dev : identity.deviation) CHECK(dev < 1e-15);

  const double eps = 1e-3;
  const auto bent = check_affine_over_plane(
      build([&](complex l, complex z) { return z + eps * l * z * (z + 1.0) * (z - 1.0); }), radii);
  for (std::size_t k = 1; k < radii.size(); ++k) CHECK(bent.deviation[k] > bent.deviation[k - 1]);
}
