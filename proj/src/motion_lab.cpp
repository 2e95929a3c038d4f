#include "holomove/motion_lab.hpp"

#include <algorithm>
#include <cmath>

#include "holomove/errors.hpp"

namespace holomove::motion {

namespace {

double max_abs(std::span<const complex> v) {
  double m = 0.0;
  for (complex x : v) m = std::max(m, std::abs(x));
  return m;
}

void require_pivots(const MotionSample& m, std::size_t i0, std::size_t i1) {
  if (i0 >= m.cols() || i1 >= m.cols()) throw input_error("pivot index outside E");
  if (i0 == i1 || m.E_points[i0] == m.E_points[i1]) throw input_error("pivots must be distinct points");
  if (m.values.size() != m.rows() * m.cols()) throw input_error("value matrix has the wrong size");
}

// winding count reported in the negative-orientation convention
int negative_winding(std::span<const complex> values, const CircleContour& c, complex target) {
  const auto derivative = spectral_derivative(values, c);
  const int count = winding_count(values, derivative, c, target).count;
  return c.orientation() == Orientation::negative ? count : -count;
}

// Winding against the preferred target, falling back to the other one when
// the trajectory passes through the first (a pivot's own trajectory does so
// at the base parameter).
std::optional<int> winding_against(std::span<const complex> values, const CircleContour& c,
                                   complex preferred, complex fallback) {
  for (complex target : {preferred, fallback}) {
    try {
      return negative_winding(values, c, target);
    } catch (const numerical_error&) {
    }
  }
  return std::nullopt;
}

bool significant(const LaurentWindow& w, int k) {
  return w.mode(k) > significance * std::max(1.0, w.scale());
}

}  // namespace

std::vector<complex> MotionSample::trajectory(std::size_t i) const {
  std::vector<complex> out(rows());
  for (std::size_t j = 0; j < rows(); ++j) out[j] = at(j, i);
  return out;
}

std::vector<complex> MotionSample::row(std::size_t j) const {
  return {values.begin() + static_cast<std::ptrdiff_t>(j * cols()),
          values.begin() + static_cast<std::ptrdiff_t>((j + 1) * cols())};
}

MotionReport validate_motion(const MotionSample& m) {
  MotionReport report;
  if (m.values.size() != m.rows() * m.cols()) {
    report.violations.push_back({ViolationKind::shape, 0, "value matrix has the wrong size"});
    return report;
  }
  if (m.cols() < 2) report.violations.push_back({ViolationKind::shape, 0, "E needs at least two points"});

  const auto base = std::find(m.param_points.begin(), m.param_points.end(), m.base_param);
  if (base == m.param_points.end()) {
    report.violations.push_back({ViolationKind::base_row, 0, "base parameter is not sampled"});
  } else {
    const auto j = static_cast<std::size_t>(base - m.param_points.begin());
    for (std::size_t i = 0; i < m.cols(); ++i) {
      if (m.at(j, i) != m.E_points[i]) {
        report.violations.push_back(
            {ViolationKind::base_row, j, "H(l0, z) != z at E index " + std::to_string(i)});
      }
    }
  }

  for (std::size_t j = 0; j < m.rows(); ++j) {
    const auto inj = check_row_injective(m.row(j), 0.0);
    if (!inj.injective) {
      report.violations.push_back({ViolationKind::injectivity, j,
                                   "E indices " + std::to_string(inj.first) + " and " +
                                       std::to_string(inj.second) + " collide"});
    }
  }
  return report;
}

double cauchy_riemann_residual(const std::function<complex(complex)>& trajectory, complex l,
                               double h) {
  const complex dx = (trajectory(l + h) - trajectory(l - h)) / (2.0 * h);
  const complex dy = (trajectory(l + complex(0.0, h)) - trajectory(l - complex(0.0, h))) / (2.0 * h);
  return std::abs(dy - complex(0.0, 1.0) * dx) / std::max(1.0, std::abs(dx));
}

InjectivityReport check_row_injective(const std::vector<complex>& row, double tol) {
  InjectivityReport r;
  r.min_separation = std::numeric_limits<double>::infinity();
  const double limit = tol * std::max(1.0, max_abs(row));
  for (std::size_t a = 0; a < row.size(); ++a) {
    for (std::size_t b = a + 1; b < row.size(); ++b) {
      const double d = std::abs(row[a] - row[b]);
      if (d < r.min_separation) r.min_separation = d;
      if (r.injective && d <= limit) {
        r.injective = false;
        r.first = a;
        r.second = b;
      }
    }
  }
  return r;
}

MotionSample normalize_tilde(const MotionSample& m, std::size_t i0, std::size_t i1) {
  require_pivots(m, i0, i1);
  const complex z0 = m.E_points[i0];
  const complex z1 = m.E_points[i1];
  MotionSample out = m;
  for (std::size_t j = 0; j < m.rows(); ++j) {
    const complex h0 = m.at(j, i0);
    const complex span = m.at(j, i1) - h0;
    for (std::size_t i = 0; i < m.cols(); ++i) {
      if (i == i0) out.at(j, i) = z0;
      else if (i == i1) out.at(j, i) = z1;
      else out.at(j, i) = z0 + (z1 - z0) * (m.at(j, i) - h0) / span;
    }
  }
  return out;
}

FGSamples extract_fg(const MotionSample& m, std::size_t i0, std::size_t i1) {
  require_pivots(m, i0, i1);
  const complex z0 = m.E_points[i0];
  const complex z1 = m.E_points[i1];
  FGSamples out;
  out.f.reserve(m.rows());
  out.g.reserve(m.rows());
  for (std::size_t j = 0; j < m.rows(); ++j) {
    const complex h0 = m.at(j, i0);
    const complex g = (m.at(j, i1) - h0) / (z1 - z0);
    out.g.push_back(g);
    out.f.push_back(h0 - z0 * g);
  }
  return out;
}

std::pair<std::size_t, std::size_t> farthest_pivots(const std::vector<complex>& E) {
  if (E.size() < 2) throw input_error("E needs at least two points");
  std::pair<std::size_t, std::size_t> best{0, 1};
  double d = -1.0;
  for (std::size_t a = 0; a < E.size(); ++a)
    for (std::size_t b = a + 1; b < E.size(); ++b)
      if (std::abs(E[a] - E[b]) > d) {
        d = std::abs(E[a] - E[b]);
        best = {a, b};
      }
  if (!(d > 0.0)) throw input_error("E points are not distinct");
  return best;
}

std::string ExtendabilityVerdict::describe() const {
  switch (kind) {
    case ExtensionKind::holomorphic: return "holomorphic(limit " + format_complex(limit) + ")";
    case ExtensionKind::pole: return "pole(" + std::to_string(order) + ")";
    default: return "essential_up_to(" + std::to_string(n_max) + ")";
  }
}

ExtendabilityVerdict classify_extension(std::span<const complex> values, const CircleContour& c,
                                        complex z0, complex z1, int n_max) {
  const int window = std::min(n_max, (c.samples() - 1) / 2);
  LaurentWindow w = laurent_coefficients(values, c, window);

  int top = 0;  // largest significant negative index
  for (int k = 1; k <= window; ++k)
    if (significant(w, -k)) top = k;

  if (top == window) {
    ExtendabilityVerdict v{ExtensionKind::essential, 0.0, 0, window, std::move(w), std::nullopt};
    return v;
  }
  if (top == 0) {
    const complex limit = w[0];
    const bool z0_first = std::abs(z0 - limit) >= std::abs(z1 - limit);
    const auto count = winding_against(values, c, z0_first ? z0 : z1, z0_first ? z1 : z0);
    if (!count) throw numerical_error("inconsistent evidence: winding undefined for a holomorphic trajectory");
    if (*count > 0) throw numerical_error("inconsistent evidence: winding reports a pole");
    return {ExtensionKind::holomorphic, limit, 0, window, std::move(w), *count};
  }

  const auto count = winding_against(values, c, z0, z1);
  if (!count) throw numerical_error("inconsistent evidence: winding undefined for a pole");
  if (*count != top)
    throw numerical_error("inconsistent evidence: Laurent pole order " + std::to_string(top) +
                          " but winding " + std::to_string(*count));
  return {ExtensionKind::pole, 0.0, top, window, std::move(w), *count};
}

MotionSample invert_parameters(const MotionSample& m) {
  if (!m.marked_at_infinity) throw input_error("puncture is not at infinity");
  MotionSample out = m;
  for (auto& l : out.param_points) {
    if (l == complex(0.0, 0.0)) throw domain_error("parameter 0 has no inverse coordinate");
    l = 1.0 / l;
  }
  out.base_param = 1.0 / m.base_param;
  out.marked_point = 0.0;
  out.marked_at_infinity = false;
  return out;
}

ExplosionDecomposition decompose_explosion(const MotionSample& m, const CircleContour& c, int n_max) {
  const auto [i0, i1] = farthest_pivots(m.E_points);
  return decompose_explosion(m, c, i0, i1, n_max);
}

ExplosionDecomposition decompose_explosion(const MotionSample& input, const CircleContour& c,
                                           std::size_t i0, std::size_t i1, int n_max) {
  if (!input.e_connected)
    throw input_error("E is not declared connected; decomposition needs a connected moving set");
  const MotionSample m = input.marked_at_infinity ? invert_parameters(input) : input;
  require_pivots(m, i0, i1);

  const complex star = m.marked_point;
  if (std::abs(c.center() - star) > 1e-12 * std::max(1.0, std::abs(star)))
    throw input_error("contour must be centered at the puncture");

  // contour point k -> parameter row
  const int samples = c.samples();
  std::vector<std::size_t> row_of(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const complex p = c.point(k);
    std::size_t best = m.rows();
    double d = 1e-9 * c.radius();
    for (std::size_t j = 0; j < m.rows(); ++j) {
      const double dj = std::abs(m.param_points[j] - p);
      if (dj <= d) {
        d = dj;
        best = j;
      }
    }
    if (best == m.rows()) throw input_error("contour point " + std::to_string(k) + " is not sampled");
    row_of[static_cast<std::size_t>(k)] = best;
  }

  const std::size_t E = m.cols();
  std::vector<std::vector<complex>> traj(E, std::vector<complex>(static_cast<std::size_t>(samples)));
  for (std::size_t i = 0; i < E; ++i)
    for (int k = 0; k < samples; ++k) traj[i][static_cast<std::size_t>(k)] = m.at(row_of[static_cast<std::size_t>(k)], i);

  ExplosionDecomposition d;
  d.inverted = input.marked_at_infinity;
  d.pivot0 = i0;
  d.pivot1 = i1;
  const complex z0 = m.E_points[i0];
  const complex z1 = m.E_points[i1];

  std::vector<LaurentWindow> windows;
  windows.reserve(E);
  for (std::size_t i = 0; i < E; ++i) {
    auto v = classify_extension(traj[i], c, z0, z1, n_max);
    if (v.kind != ExtensionKind::holomorphic)
      throw numerical_error("not horizontally extendable: trajectory " + std::to_string(i) + " is " +
                            v.describe());
    d.limits.push_back(v.limit);
    windows.push_back(std::move(v.evidence));
  }
  const int window = windows.front().n_max();

  std::vector<complex> f(static_cast<std::size_t>(samples));
  std::vector<complex> g(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    g[ks] = (traj[i1][ks] - traj[i0][ks]) / (z1 - z0);
    f[ks] = traj[i0][ks] - z0 * g[ks];
  }
  const double g_size = max_abs(g);
  if (!(g_size > 1e-300)) throw input_error("degenerate input: g vanishes on the samples");

  // order of the zero of g at the puncture (argument principle on g itself)
  int n;
  try {
    n = -negative_winding(g, c, 0.0);
  } catch (const numerical_error&) {
    throw numerical_error("inconsistent evidence: winding of g undefined");
  }
  if (n < 0) throw numerical_error("not horizontally extendable: g has a pole");
  if (n > window) throw numerical_error("explosion order exceeds the Laurent window");

  const LaurentWindow fw = laurent_coefficients(f, c, window);
  const LaurentWindow gw = laurent_coefficients(g, c, window);
  for (int k = 0; k < n; ++k)
    if (significant(gw, k))
      throw numerical_error("inconsistent evidence: g has a significant coefficient below its order");
  if (!significant(gw, n)) throw numerical_error("inconsistent evidence: leading coefficient of g is negligible");

  d.order = n;
  for (int k = 0; k <= window; ++k) {
    d.f_taylor.push_back(fw[k]);
    d.g_taylor.push_back(gw[k]);
  }
  d.P = Polynomial(std::vector<complex>(d.f_taylor.begin(), d.f_taylor.begin() + n));

  // Hhat(l*, z) is coefficient n of H^z: P has degree < n and g vanishes to order n.
  MotionSample& hat = d.hatH;
  hat.base_param = star;
  hat.marked_point = star;
  hat.e_connected = m.e_connected;
  hat.param_points.push_back(star);
  for (std::size_t i = 0; i < E; ++i) {
    hat.E_points.push_back(windows[i][n]);
    d.psi_samples.emplace_back(windows[i][n], m.E_points[i]);
  }
  hat.values = hat.E_points;
  for (int k = 0; k < samples; ++k) {
    const complex delta = c.point(k) - star;
    const complex p = d.P(delta);
    const complex dn = std::pow(delta, n);
    hat.param_points.push_back(c.point(k));
    for (std::size_t i = 0; i < E; ++i) {
      const auto ks = static_cast<std::size_t>(k);
      hat.values.push_back((traj[i][ks] - p) / dn);

      complex taylor{0.0, 0.0};
      for (int t = window - n; t >= 0; --t) taylor = taylor * delta + windows[i][n + t];
      d.residual = std::max(d.residual, std::abs(traj[i][ks] - (p + dn * taylor)));
    }
  }
  return d;
}

CorollaryVerdict corollary_classify(const ExplosionDecomposition& d, double tol) {
  if (d.limits.size() < 2) throw input_error("corollary needs at least two trajectory limits");
  const double scale = std::max(1.0, max_abs(d.limits));
  const complex l0 = d.limits[d.pivot0];
  const complex l1 = d.limits[d.pivot1];
  if (std::abs(l0 - l1) > tol * scale) {
    if (d.order != 0) throw numerical_error("inconsistent evidence: distinct limits but g(l*) = 0");
    return {CorollaryKind::motion_extension, 0.0};
  }
  if (d.order == 0) throw numerical_error("inconsistent evidence: equal limits but g(l*) != 0");
  const complex z_star = d.f_taylor.front();
  for (complex l : d.limits)
    if (std::abs(l - z_star) > tol * scale)
      throw numerical_error("inconsistent evidence: limits do not collapse to one point");
  return {CorollaryKind::explosion_to, z_star};
}

AffinityReport check_affine_over_plane(const MotionSample& m, const std::vector<double>& radii) {
  const auto [i0, i1] = farthest_pivots(m.E_points);
  const MotionSample t = normalize_tilde(m, i0, i1);
  AffinityReport r;
  for (double R : radii) {
    double dev = 0.0;
    for (std::size_t j = 0; j < t.rows(); ++j) {
      if (std::abs(t.param_points[j]) > R) continue;
      for (std::size_t i = 0; i < t.cols(); ++i) dev = std::max(dev, std::abs(t.at(j, i) - t.E_points[i]));
    }
    r.radii.push_back(R);
    r.deviation.push_back(dev);
  }
  return r;
}

}  // namespace holomove::motion
