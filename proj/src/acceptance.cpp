#include "holomove/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "holomove/applications.hpp"
#include "holomove/boettcher.hpp"
#include "holomove/errors.hpp"
#include "holomove/families.hpp"
#include "holomove/hyperbolic.hpp"
#include "holomove/motion_lab.hpp"

namespace holomove::acceptance {

namespace {

using namespace std::complex_literals;
using families::RationalParam;

constexpr std::uint64_t seed = 20240611;
const double e_inv = std::exp(-1.0);

template <class... Args>
std::string strf(const char* format, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

complex in_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

complex random_lambda(std::mt19937_64& rng) {
  complex l;
  do l = in_disk(rng, 1.0);
  while (l == complex(0.0, 0.0));
  return l;
}

CriterionResult result(bool pass, std::string detail) { return {0, "", pass, std::move(detail), 0.0, 0.0}; }

// -- closed-form algebra ----------------------------------------------------

CriterionResult sigma_identity(Context&) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const complex l = random_lambda(rng);
    const complex A = in_disk(rng, 10.0);
    const auto d = families::fixed_points_G(RationalParam(l, A));
    worst = std::max(worst, std::abs(d.sigma3 - (d.sigma1 - 2.0)));
  }
  return result(worst < 1e-9, strf("max |s3 - (s1 - 2)| = %.3g over 1000 samples", worst));
}

CriterionResult sigma_product(Context&) {
  std::mt19937_64 rng(seed + 1);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const complex l = random_lambda(rng);
    const complex A = in_disk(rng, 10.0);
    const auto d = families::fixed_points_G(RationalParam(l, A));
    worst = std::max(worst, std::abs(d.multipliers[1] * d.multipliers[2] - families::sigma_of_A(l, A)));
  }
  return result(worst < 1e-8, strf("max product error = %.3g over 1000 samples", worst));
}

CriterionResult mu_consistency(Context&) {
  std::mt19937_64 rng(seed + 2);
  double end_err = 0.0;
  double trip_err = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const complex l = random_lambda(rng);
    const complex A = in_disk(rng, 10.0);
    end_err = std::max(end_err, std::abs(families::A_of_mu(l, 0.0) - (l - 2.0) * (l - 2.0)));
    end_err = std::max(end_err, std::abs(families::A_of_mu(l, 1.0) - (4.0 - 4.0 * l)));
    const auto mu = families::mu_of_A(l, A);
    trip_err = std::max(trip_err, std::abs(families::A_of_mu(l, mu.first) - A));
    trip_err = std::max(trip_err, std::abs(families::A_of_mu(l, mu.second) - A));
  }
  return result(end_err <= 1e-12 && trip_err <= 1e-10,
                strf("endpoint error %.3g, round-trip error %.3g", end_err, trip_err));
}

// -- Boettcher coordinate and the basin motion ------------------------------

CriterionResult boettcher_normalization(Context&) {
  std::mt19937_64 rng(seed + 3);
  double worst_derivative = 0.0;
  double worst_functional = 0.0;
  for (complex a : {complex(6.0), complex(10.0, 4.0), complex(40.0)}) {
    const basin::BoettcherChart chart(a);
    const double h = 1e-5;
    const complex d = (chart.phi(h) - chart.phi(-h)) / (2.0 * h);
    worst_derivative = std::max(worst_derivative, std::abs(d - a / 2.0));
    const families::EntireParam p(a);
    for (int k = 0; k < 50; ++k) {
      const complex z = chart.psi(in_disk(rng, chart.inner_radius()));
      const complex w = chart.phi(z);
      worst_functional =
          std::max(worst_functional, std::abs(chart.phi(families::eval_entire(p, z)) - w * w));
    }
  }
  return result(worst_derivative <= 1e-6 && worst_functional < 1e-8,
                strf("derivative error %.3g, functional-equation residual %.3g", worst_derivative,
                     worst_functional));
}

CriterionResult motion_leading_term(Context&) {
  const complex a0 = 6.0;
  const basin::BoettcherChart base(a0);
  double worst = 0.0;
  for (complex a : {complex(8.0), complex(0.0, 20.0), complex(50.0)}) {
    const basin::BoettcherChart target(a);
    const double h = 1e-6;
    const complex d = (basin::motion_H(base, target, h) - basin::motion_H(base, target, -h)) / (2.0 * h);
    worst = std::max(worst, std::abs(d - a0 / a) / std::abs(a0 / a));
  }
  return result(worst <= 1e-6, strf("max relative error of dH/dz(a, 0) vs a0/a = %.3g", worst));
}

CriterionResult koebe_bound(Context&) {
  std::mt19937_64 rng(seed + 4);
  int violations = 0;
  int failures = 0;
  double tightest = std::numeric_limits<double>::infinity();
  for (complex a : {complex(20.0), complex(100.0)}) {
    const basin::BoettcherChart chart(a);
    for (int k = 0; k < 500; ++k) {
      const complex w = in_disk(rng, chart.inner_radius());
      try {
        const double bound = std::abs(w) / ((1.0 - std::abs(w)) * (1.0 - std::abs(w)));
        const double value = std::abs(basin::hat_H(chart, w));
        if (value > bound) ++violations;
        if (w != complex(0.0, 0.0)) tightest = std::min(tightest, bound - value);
      } catch (const numerical_error&) {
        ++failures;
      }
    }
  }
  return result(violations == 0 && failures == 0,
                strf("%d violations, %d uncomputed of 1000; smallest slack %.3g", violations, failures,
                     tightest));
}

// -- explosions -------------------------------------------------------------

CriterionResult order_one_explosion(Context&) {
  const std::vector<complex> w{0.1, 0.3i, 0.0, complex(-0.2, 0.15)};
  const auto src = applications::immediate_basin_source(100.0, 256, w);
  const auto d = motion::decompose_explosion(src.sample, src.contour);
  double worst = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    worst = std::max(worst, std::abs(d.hatH.E_points[i] - 2.0 * w[i]) / std::abs(2.0 * w[i]));
  return result(d.order == 1 && worst <= 1e-3,
                strf("n = %d, max relative error of 1/a coefficient vs 2w = %.3g (residual %.3g)", d.order,
                     worst, d.residual));
}

CriterionResult order_two_explosion(Context&) {
  const std::vector<complex> w{0.1, 0.3i, 0.0, complex(-0.2, 0.15)};
  const auto centers = families::basin_centers(1);
  bool pass = true;
  std::string detail;
  for (int i : {1, -1}) {
    const auto src = applications::preimage_source(i, 100.0, 256, w);
    const auto d = motion::decompose_explosion(src.sample, src.contour);
    double scale = 0.0;
    for (complex v : src.sample.values) scale = std::max(scale, std::abs(v));
    const double first = d.P.degree() >= 1 ? std::abs(d.P.coefficients()[1]) : 0.0;
    const complex zi = centers[i];
    double worst = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
      const complex expected = 2.0 * w[k] / (std::exp(zi) * zi);
      worst = std::max(worst, std::abs(d.hatH.E_points[k] - expected) / std::abs(expected));
    }
    pass = pass && d.order == 2 && first < 1e-6 * scale && worst <= 1e-2;
    detail += strf("%si=%d: n=%d, |1/a coeff| = %.3g (scale %.3g), 1/a^2 rel err %.3g", detail.empty() ? "" : "; ",
                   i, d.order, first, scale, worst);
  }
  return result(pass, detail);
}

CriterionResult counterexample_gallery(Context&) {
  const CircleContour ch(0.0, 0.25, 256, Orientation::negative);
  const auto pole =
      motion::classify_extension(sample_on(ch, [](complex l) { return 1.0 / l; }), ch, 0.0, e_inv);

  const CircleContour cg(0.0, e_inv, 256, Orientation::negative);
  std::vector<complex> limits;
  bool all_holomorphic = true;
  for (int power = 0; power < 3; ++power) {
    const auto v = motion::classify_extension(
        sample_on(cg, [power](complex l) { return power == 0 ? complex(0.0) : std::pow(l, power); }), cg,
        0.0, e_inv);
    all_holomorphic = all_holomorphic && v.kind == motion::ExtensionKind::holomorphic;
    limits.push_back(v.limit);
  }
  double limit_size = 0.0;
  for (complex v : limits) limit_size = std::max(limit_size, std::abs(v));
  const bool collapsed = !motion::check_row_injective(limits).injective && limit_size < 1e-12;

  const CircleContour ce(0.0, 0.05, 256, Orientation::negative);
  const double base = 0.5;
  const auto ess = motion::classify_extension(
      sample_on(ce, [&](complex l) { return std::exp(1.0 / l) - std::exp(1.0 / base) + 0.3; }), ce, 0.0, 1.0);

  const bool pass = pole.describe() == "pole(1)" && all_holomorphic && collapsed &&
                    ess.describe() == "essential_up_to(32)";
  return result(pass, strf("1/l -> %s; gallery G holomorphic=%d, limit row max %.2g, injective=%d; "
                           "exp(1/l) -> %s",
                           pole.describe().c_str(), all_holomorphic, limit_size, !collapsed,
                           ess.describe().c_str()));
}

CriterionResult decomposition_uniqueness(Context&) {
  const complex l0 = 0.3;
  const CircleContour c(0.0, 0.3, 256);
  const std::vector<complex> E{0.0, 1.0, complex(0.5, 0.5), -1.0, 0.2i};
  auto m = motion::sample_motion(c, l0, 0.0, E, true, [&](complex l, std::size_t i) {
    return (l - l0) + (l / l0) * (l / l0) * E[i];
  });
  m.param_points[0] = l0;
  for (std::size_t i = 0; i < E.size(); ++i) m.values[i] = E[i];

  const auto d = motion::decompose_explosion(m, c);
  double p_err = std::numeric_limits<double>::infinity();
  if (d.P.degree() == 1)
    p_err = std::max(std::abs(d.P.coefficients()[0] + l0), std::abs(d.P.coefficients()[1] - 1.0));
  double spread = 0.0;
  bool same_order = true;
  for (auto [i0, i1] : {std::pair<std::size_t, std::size_t>{0, 1}, {2, 4}, {3, 1}}) {
    const auto other = motion::decompose_explosion(m, c, i0, i1);
    same_order = same_order && other.order == d.order && other.P.degree() == d.P.degree();
    if (!same_order) break;
    for (int k = 0; k <= d.P.degree(); ++k)
      spread = std::max(spread, std::abs(other.P.coefficients()[static_cast<std::size_t>(k)] -
                                         d.P.coefficients()[static_cast<std::size_t>(k)]));
  }
  return result(d.order == 2 && p_err <= 1e-8 && same_order && spread <= 1e-6,
                strf("n = %d, P error %.3g, pivot-pair spread %.3g", d.order, p_err, spread));
}

CriterionResult corollary_dichotomy(Context&) {
  const auto app1 = applications::immediate_basin_source();
  const auto d1 = motion::decompose_explosion(app1.sample, app1.contour);
  const auto v1 = motion::corollary_classify(d1);
  const auto app2 = applications::per1_special_source();
  const auto d2 = motion::decompose_explosion(app2.sample, app2.contour, app2.pivot0, app2.pivot1);
  const auto v2 = motion::corollary_classify(d2);
  const bool pass = v1.kind == motion::CorollaryKind::explosion_to && std::abs(v1.z_star) < 1e-8 &&
                    v2.kind == motion::CorollaryKind::motion_extension;
  return result(pass, strf("basin motion -> %s (z* = %s); Per_1 trajectories -> %s (n = %d)",
                           v1.kind == motion::CorollaryKind::explosion_to ? "explosion_to" : "motion_extension",
                           format_complex(v1.z_star, 3).c_str(),
                           v2.kind == motion::CorollaryKind::explosion_to ? "explosion_to" : "motion_extension",
                           d2.order));
}

// -- rasters ----------------------------------------------------------------

bool member_at(const atlas::RasterClass& r, complex z) {
  const auto [col, row] = r.spec.window.pixel_of(z, r.width(), r.height());
  return col >= 0 && r.at(col, row) == atlas::member;
}

CriterionResult figure_reproduction(Context& ctx) {
  const auto& c0 = ctx.c0_raster();
  const int W = c0.width();
  const int H = c0.height();
  const std::size_t members = c0.count(atlas::member);
  bool boundary = false;
  for (int k = 0; k < W; ++k) boundary = boundary || c0.at(k, 0) == atlas::member || c0.at(k, H - 1) == atlas::member;
  for (int k = 0; k < H; ++k) boundary = boundary || c0.at(0, k) == atlas::member || c0.at(W - 1, k) == atlas::member;
  std::vector<std::uint8_t> mask(c0.labels.size());
  for (std::size_t k = 0; k < mask.size(); ++k) mask[k] = c0.labels[k] == atlas::member;
  int components = 0;
  const auto ids = label_components(mask, W, H, &components);
  std::vector<std::size_t> sizes(static_cast<std::size_t>(components), 0);
  for (int id : ids)
    if (id >= 0) ++sizes[static_cast<std::size_t>(id)];
  const std::size_t largest = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());

  const int res = ctx.resolution();
  atlas::RenderSpec ls;
  ls.kind = atlas::RenderKind::locus_G;
  ls.window = atlas::default_window(ls.kind);
  ls.width = ls.height = res;
  ls.lambda = e_inv;
  const auto locus = render(ls, ctx.workers);
  const complex l = e_inv;
  const bool center = member_at(locus, (l - 2.0) * (l - 2.0));
  const bool root = member_at(locus, 4.0 - 4.0 * l);
  // A = 0 lies outside [1,5]x[-2,2]; same pitch on a window centred at 0
  ls.window = {-2.0, 2.0, -2.0, 2.0};
  const auto around0 = render(ls, ctx.workers);
  const bool zero_out = !member_at(around0, 0.0);

  const bool pass = members > 0 && !boundary && components == 1 && center && root && zero_out;
  return result(pass, strf("C0 at %dx%d: %zu pixels, boundary hit %d, %d component(s) (largest %zu), "
                           "undecided %zu; locus: center %d root %d A=0 excluded %d",
                           W, H, members, boundary, components, largest, c0.count(atlas::undecided), center, root,
                           zero_out));
}

CriterionResult locus_convergence(Context& ctx) {
  const int res = ctx.resolution();
  atlas::RenderSpec ms;
  ms.kind = atlas::RenderKind::mandelbrot;
  ms.window = atlas::default_window(ms.kind);
  ms.width = ms.height = res;
  const auto M = render(ms, ctx.workers);

  std::vector<double> d;
  for (double lr : {0.2, 0.1, 0.05}) {
    const complex l = lr;
    const complex s = (l - 2.0) * (l - 2.0);
    // preimage of the Mandelbrot window under A -> ((l-2)^2 - A) / (4 l^2)
    atlas::RenderSpec gs;
    gs.kind = atlas::RenderKind::locus_G;
    gs.lambda = l;
    gs.width = gs.height = res;
    const double q = 4.0 * lr * lr;
    gs.window = {s.real() - q * ms.window.x_max, s.real() - q * ms.window.x_min, -q * ms.window.y_max,
                 -q * ms.window.y_min};
    const auto G = render(gs, ctx.workers);
    // distances in the c-plane, scaled by 4 to compare ((l-2)^2 - A) / l^2 with 4M
    d.push_back(4.0 * atlas::hausdorff_pixels(G, M, atlas::member, atlas::member,
                                              atlas::Affine{-1.0 / (4.0 * l * l), s / (4.0 * l * l)}));
  }
  return result(d[0] > d[1] && d[1] > d[2],
                strf("d_H at lambda 0.2, 0.1, 0.05 (res %d): %.4g, %.4g, %.4g", res, d[0], d[1], d[2]));
}

CriterionResult k_bound_pipeline(Context& ctx) {
  const auto& c0 = ctx.c0_raster();
  const double R0 = 1.1 * atlas::bounding_radius(c0, atlas::member);
  double previous = std::numeric_limits<double>::infinity();
  bool decreasing = true;
  bool exact = true;
  bool outside = true;
  std::string values;
  for (double a : {15.0, 30.0, 60.0}) {
    outside = outside && atlas::in_unbounded_complement(c0, a, R0);
    const auto e = hyperbolic::K_upper_bound(a, R0);
    decreasing = decreasing && e.K_upper < previous;
    previous = e.K_upper;
    exact = exact && std::abs(e.K_upper - std::exp(e.d_upper)) <=
                         2.0 * std::numeric_limits<double>::epsilon() * e.K_upper;
    values += strf(" K(%g)=%.6g", a, e.K_upper);
  }
  return result(decreasing && exact && outside,
                strf("R0 = %.4g;%s; decreasing %d, exp(d) exact %d", R0, values.c_str(), decreasing, exact));
}

CriterionResult determinism(Context& ctx) {
  const int res = ctx.resolution() / 2;
  std::string detail;
  bool pass = true;
  for (auto kind : {atlas::RenderKind::param_plane_fa, atlas::RenderKind::dyn_plane_fa, atlas::RenderKind::locus_G,
                    atlas::RenderKind::mandelbrot}) {
    atlas::RenderSpec s;
    s.kind = kind;
    s.window = atlas::default_window(kind);
    s.width = res;
    s.height = res - 16;  // partial tiles on one edge
    s.a = complex(16.33, 1.866);
    s.lambda = complex(0.4, -0.35);
    const auto one = render(s, 1);
    const auto ppm = atlas::encode_ppm(one);
    const auto dump = atlas::encode_label_dump(one);
    bool same = true;
    for (int workers : {4, 8}) {
      const auto other = render(s, workers);
      same = same && atlas::encode_ppm(other) == ppm && atlas::encode_label_dump(other) == dump &&
             other.steps == one.steps;
    }
    pass = pass && same;
    detail += strf("%s%s %s", detail.empty() ? "" : ", ", atlas::to_string(kind).c_str(), same ? "identical" : "DIFFERS");
  }
  return result(pass, strf("workers 1/4/8 at %dx%d: ", res, res - 16) + detail);
}

}  // namespace

Suite suite_from_string(const std::string& name) {
  if (name == "fast") return Suite::fast;
  if (name == "full") return Suite::full;
  throw input_error("unknown suite '" + name + "' (fast or full)");
}

std::string to_string(Suite suite) { return suite == Suite::fast ? "fast" : "full"; }

const atlas::RasterClass& Context::c0_raster() {
  if (!c0_) {
    atlas::RenderSpec s;
    s.kind = atlas::RenderKind::param_plane_fa;
    s.window = atlas::default_window(s.kind);
    s.width = s.height = resolution();
    c0_ = atlas::render(s, workers);
  }
  return *c0_;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "sigma3 = sigma1 - 2", 1.0, sigma_identity},
      {2, "multiplier product vs A", 1.0, sigma_product},
      {3, "mu <-> A consistency", 0.0, mu_consistency},
      {4, "Boettcher normalization", 5.0, boettcher_normalization},
      {5, "motion leading term", 0.0, motion_leading_term},
      {6, "Koebe bound", 0.0, koebe_bound},
      {7, "order-1 explosion", 30.0, order_one_explosion},
      {8, "order-2 explosion", 60.0, order_two_explosion},
      {9, "counterexample gallery", 5.0, counterexample_gallery},
      {10, "decomposition uniqueness", 0.0, decomposition_uniqueness},
      {11, "corollary dichotomy", 0.0, corollary_dichotomy},
      {12, "figure reproduction", 180.0, figure_reproduction},
      {13, "locus convergence", 300.0, locus_convergence},
      {14, "K-bound pipeline", 0.0, k_bound_pipeline},
      {15, "render determinism", 0.0, determinism},
  };
  return list;
}

std::vector<CriterionResult> run_suite(Context& ctx, const std::vector<int>& only,
                                       const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = c.run(ctx);
    } catch (const std::exception& e) {
      r = result(false, std::string("error: ") + e.what());
    }
    r.id = c.id;
    r.name = c.name;
    r.budget = c.budget;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.budget > 0.0 && r.seconds > r.budget) {
      r.pass = false;
      r.detail += strf(" [over budget: %.1f s > %.0f s]", r.seconds, r.budget);
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  return strf("%s %2d  %-26s (%.2f s)  ", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds) + r.detail;
}

}  // namespace holomove::acceptance
