#include "holomove/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holomove/boettcher.hpp"
#include "holomove/errors.hpp"

namespace holomove::atlas {

namespace {

constexpr int entire_default_iter = 500;
constexpr double entire_default_escape = 50.0;

std::uint8_t label_of(basin::Fate f) {
  switch (f) {
    case basin::Fate::attracted: return member;  // refined by the component pass
    case basin::Fate::escaped: return exterior;
    case basin::Fate::other_cycle: return other_attractor;
    default: return undecided;
  }
}

// Squared Euclidean distance transform along one line with sample spacing h
// (lower envelope of parabolas).
void edt_line(const double* f, double* d, int n, double h, std::vector<int>& v, std::vector<double>& z) {
  const double inf = std::numeric_limits<double>::infinity();
  const double h2 = h * h;
  v.assign(static_cast<std::size_t>(n), 0);
  z.assign(static_cast<std::size_t>(n) + 1, 0.0);
  int k = -1;
  for (int q = 0; q < n; ++q) {
    if (f[q] == inf) continue;
    if (k < 0) {
      k = 0;
      v[0] = q;
      z[0] = -inf;
      z[1] = inf;
      continue;
    }
    double s;
    for (;;) {
      const int p = v[static_cast<std::size_t>(k)];
      s = ((f[q] + h2 * q * q) - (f[p] + h2 * p * p)) / (2.0 * h2 * (q - p));
      if (s <= z[static_cast<std::size_t>(k)] && k > 0) {
        --k;
        continue;
      }
      break;
    }
    if (s <= z[static_cast<std::size_t>(k)]) {
      // k == 0 and the new parabola dominates everywhere
      v[0] = q;
      z[0] = -inf;
      z[1] = inf;
      continue;
    }
    ++k;
    v[static_cast<std::size_t>(k)] = q;
    z[static_cast<std::size_t>(k)] = s;
    z[static_cast<std::size_t>(k) + 1] = inf;
  }
  if (k < 0) {
    std::fill(d, d + n, inf);
    return;
  }
  int j = 0;
  for (int q = 0; q < n; ++q) {
    while (z[static_cast<std::size_t>(j) + 1] < q) ++j;
    const int p = v[static_cast<std::size_t>(j)];
    d[q] = h2 * (q - p) * (q - p) + f[p];
  }
}

std::vector<double> edt_squared(const std::vector<std::uint8_t>& on, int W, int H, double hx, double hy) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> grid(on.size());
  for (std::size_t k = 0; k < on.size(); ++k) grid[k] = on[k] ? 0.0 : inf;
  std::vector<int> v;
  std::vector<double> z;
  std::vector<double> in(static_cast<std::size_t>(std::max(W, H)));
  std::vector<double> out(in.size());
  for (int r = 0; r < H; ++r) {
    double* row = grid.data() + static_cast<std::size_t>(r) * W;
    std::copy(row, row + W, in.begin());
    edt_line(in.data(), row, W, hx, v, z);
  }
  for (int c = 0; c < W; ++c) {
    for (int r = 0; r < H; ++r) in[static_cast<std::size_t>(r)] = grid[static_cast<std::size_t>(r) * W + c];
    edt_line(in.data(), out.data(), H, hy, v, z);
    for (int r = 0; r < H; ++r) grid[static_cast<std::size_t>(r) * W + c] = out[static_cast<std::size_t>(r)];
  }
  return grid;
}

}  // namespace

std::string to_string(RenderKind kind) {
  switch (kind) {
    case RenderKind::param_plane_fa: return "param_plane_fa";
    case RenderKind::dyn_plane_fa: return "dyn_plane_fa";
    case RenderKind::locus_G: return "locus_G";
    default: return "mandelbrot";
  }
}

RenderKind render_kind_from_string(const std::string& name) {
  for (auto k : {RenderKind::param_plane_fa, RenderKind::dyn_plane_fa, RenderKind::locus_G, RenderKind::mandelbrot})
    if (to_string(k) == name) return k;
  throw input_error("unknown render kind: " + name);
}

Palette default_palette() {
  return {Rgb{255, 255, 255}, Rgb{0x30, 0x60, 0xC0}, Rgb{0x80, 0x80, 0x80}, Rgb{0x80, 0xA0, 0xE0},
          Rgb{0xD0, 0xD0, 0xD0}};
}

Window default_window(RenderKind kind) {
  switch (kind) {
    case RenderKind::param_plane_fa:
    case RenderKind::dyn_plane_fa: return {-10.0, 10.0, -10.0, 10.0};
    case RenderKind::locus_G: return {1.0, 5.0, -2.0, 2.0};
    default: return {-2.25, 0.75, -1.5, 1.5};
  }
}

void RenderSpec::validate() const {
  window.validate();
  if (width < 16 || height < 16) throw input_error("render resolution must be at least 16x16");
  if (max_iter < 0) throw input_error("max_iter must be nonnegative");
  if (escape_radius < 0.0 || !std::isfinite(escape_radius)) throw input_error("escape radius must be nonnegative");
  if (kind == RenderKind::dyn_plane_fa && a == complex(0.0, 0.0)) throw domain_error("dynamical plane needs a != 0");
  if (kind == RenderKind::locus_G && lambda == complex(0.0, 0.0)) throw domain_error("locus needs lambda != 0");
}

int RenderSpec::effective_max_iter() const {
  if (max_iter > 0) return max_iter;
  switch (kind) {
    case RenderKind::param_plane_fa:
    case RenderKind::dyn_plane_fa: return entire_default_iter;
    case RenderKind::locus_G: return families::rational_orbit_defaults.max_iter;
    default: return families::quadratic_orbit_defaults.max_iter;
  }
}

double RenderSpec::effective_escape_radius() const {
  if (escape_radius > 0.0) return escape_radius;
  switch (kind) {
    case RenderKind::param_plane_fa:
    case RenderKind::dyn_plane_fa: return entire_default_escape;
    case RenderKind::locus_G: return families::rational_orbit_defaults.escape_radius;
    default: return families::quadratic_orbit_defaults.escape_radius;
  }
}

std::size_t RasterClass::count(std::uint8_t label) const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), label));
}

RasterClass render(const RenderSpec& spec, int workers) {
  spec.validate();
  RasterClass r;
  r.spec = spec;
  r.max_iter = spec.effective_max_iter();
  r.escape_radius = spec.effective_escape_radius();
  const int W = spec.width;
  const int H = spec.height;
  const std::size_t n = static_cast<std::size_t>(W) * H;
  r.labels.assign(n, undecided);
  r.steps.assign(n, 0);

  if (spec.kind == RenderKind::dyn_plane_fa) {
    const auto g = basin::basin_grid(spec.a, spec.window, W, H, {r.max_iter, r.escape_radius}, workers);
    for (std::size_t k = 0; k < n; ++k) {
      r.steps[k] = g.steps[k];
      r.labels[k] = label_of(g.fates[k]);
      if (g.fates[k] == basin::Fate::attracted) r.labels[k] = g.component[k] == g.immediate ? member : other_basin;
    }
    return r;
  }

  const families::OrbitOptions orbit{r.max_iter, r.escape_radius};
  const basin::BasinBudget budget{r.max_iter, r.escape_radius};
  std::vector<std::uint8_t> unsettled(n, 0);

  for_each_tile(W, H, workers, [&](int c0, int r0, int c1, int r1) {
    for (int row = r0; row < r1; ++row) {
      for (int col = c0; col < c1; ++col) {
        const complex p = spec.window.pixel_center(col, row, W, H);
        const std::size_t k = static_cast<std::size_t>(row) * W + col;
        switch (spec.kind) {
          case RenderKind::param_plane_fa: {
            if (p == complex(0.0, 0.0)) {
              r.labels[k] = member;
              break;
            }
            const auto f = basin::orbit_fate(families::EntireParam(p), p, budget);
            r.labels[k] = label_of(f.fate);
            r.steps[k] = f.steps;
            if (f.fate == basin::Fate::attracted) {
              // a is attracted; C0 needs it in the immediate basin
              switch (basin::in_C0(p, {budget})) {
                case basin::C0Verdict::inside: break;
                case basin::C0Verdict::outside: r.labels[k] = other_basin; break;
                default: r.labels[k] = undecided;
              }
            }
            break;
          }
          case RenderKind::locus_G: {
            const families::RationalParam g(spec.lambda, p, spec.branch);
            const auto v1 = families::orbit_bounded_G(g, 1.0, orbit);
            auto v = v1;
            if (v1.kind == families::OrbitKind::escaped) {
              const auto v2 = families::orbit_bounded_G(g, -1.0, orbit);
              v = v2.kind == families::OrbitKind::escaped
                      ? families::OrbitVerdict{v2.kind, std::max(v1.steps, v2.steps), false}
                      : v2;
            }
            r.labels[k] = v.kind == families::OrbitKind::bounded ? member : exterior;
            r.steps[k] = v.steps;
            unsettled[k] = v.kind == families::OrbitKind::bounded && !v.settled;
            break;
          }
          default: {
            const auto v = families::orbit_bounded_Q(p, 0.0, orbit);
            r.labels[k] = v.kind == families::OrbitKind::bounded ? member : exterior;
            r.steps[k] = v.steps;
            unsettled[k] = v.kind == families::OrbitKind::bounded && !v.settled;
            break;
          }
        }
      }
    }
  });
  r.unsettled_members = static_cast<std::size_t>(std::count(unsettled.begin(), unsettled.end(), 1));

  return r;
}

double bounding_radius(const RasterClass& r, std::uint8_t label) {
  double best = -1.0;
  for (int row = 0; row < r.height(); ++row)
    for (int col = 0; col < r.width(); ++col)
      if (r.at(col, row) == label)
        best = std::max(best, std::abs(r.spec.window.pixel_center(col, row, r.width(), r.height())));
  if (best < 0.0) throw input_error("label absent from raster");
  return best;
}

double hausdorff_pixels(const RasterClass& A, const RasterClass& B, std::uint8_t labelA,
                        std::uint8_t labelB, Affine transform) {
  const Window& wa = A.spec.window;
  const Window& wb = B.spec.window;
  const double pbx = wb.width() / B.width();
  const double pby = wb.height() / B.height();
  const double scale = std::abs(transform.scale);
  if (!(scale > 0.0)) throw input_error("transform must be invertible");
  const double pa = scale * std::min(wa.width() / A.width(), wa.height() / A.height());
  const int kx = std::max(1, static_cast<int>(std::ceil(pbx / pa - 1e-9)));
  const int ky = std::max(1, static_cast<int>(std::ceil(pby / pa - 1e-9)));
  const double hx = pbx / kx;
  const double hy = pby / ky;
  const complex origin = wb.pixel_center(0, 0, B.width(), B.height());

  // node indices of both sets
  std::vector<std::pair<long long, long long>> na;
  std::vector<std::pair<long long, long long>> nb;
  for (int row = 0; row < A.height(); ++row)
    for (int col = 0; col < A.width(); ++col)
      if (A.at(col, row) == labelA) {
        const complex z = transform(wa.pixel_center(col, row, A.width(), A.height()));
        na.emplace_back(std::llround((z.real() - origin.real()) / hx), std::llround((origin.imag() - z.imag()) / hy));
      }
  for (int row = 0; row < B.height(); ++row)
    for (int col = 0; col < B.width(); ++col)
      if (B.at(col, row) == labelB) nb.emplace_back(static_cast<long long>(col) * kx, static_cast<long long>(row) * ky);
  if (na.empty() || nb.empty()) throw input_error("Hausdorff distance of an empty pixel set");

  long long x0 = na[0].first, x1 = x0, y0 = na[0].second, y1 = y0;
  for (const auto* set : {&na, &nb})
    for (auto [x, y] : *set) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  const long long GW = x1 - x0 + 1;
  const long long GH = y1 - y0 + 1;
  if (GW * GH > 64LL * 1024 * 1024) throw input_error("Hausdorff grid too large");
  const int W = static_cast<int>(GW);
  const int H = static_cast<int>(GH);
  std::vector<std::uint8_t> ma(static_cast<std::size_t>(W) * H, 0);
  std::vector<std::uint8_t> mb(ma.size(), 0);
  auto idx = [&](std::pair<long long, long long> p) {
    return static_cast<std::size_t>(p.second - y0) * W + static_cast<std::size_t>(p.first - x0);
  };
  for (auto p : na) ma[idx(p)] = 1;
  for (auto p : nb) mb[idx(p)] = 1;

  const auto da = edt_squared(ma, W, H, hx, hy);
  const auto db = edt_squared(mb, W, H, hx, hy);
  double worst = 0.0;
  for (std::size_t k = 0; k < ma.size(); ++k) {
    if (ma[k]) worst = std::max(worst, db[k]);
    if (mb[k]) worst = std::max(worst, da[k]);
  }
  return std::sqrt(worst);
}

bool in_unbounded_complement(const RasterClass& c0, complex a, double R0) {
  if (std::abs(a) > R0) return true;
  const auto [col, row] = c0.spec.window.pixel_of(a, c0.width(), c0.height());
  if (col < 0) throw input_error("parameter lies outside the rendered window");
  std::vector<std::uint8_t> passable(c0.labels.size());
  for (std::size_t k = 0; k < passable.size(); ++k) passable[k] = c0.labels[k] != member;
  const auto seen = reachable_from_border(passable, c0.width(), c0.height());
  return seen[static_cast<std::size_t>(row) * c0.width() + col] != 0;
}

}  // namespace holomove::atlas
