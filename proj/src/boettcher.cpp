#include "holomove/boettcher.hpp"

#include <cmath>
#include <numbers>

#include "holomove/errors.hpp"

namespace holomove::basin {

using families::entire_core_quotient;
using families::entire_core_quotient_derivative;

namespace {

bool finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

complex step(const EntireParam& p, complex z) {
  return p.a * z * z * entire_core_quotient(z);
}

}  // namespace

double contraction_radius(complex a) { return 1.0 / (2.0 + 2.0 * std::abs(a)); }

FateResult orbit_fate(const EntireParam& p, complex z, BasinBudget budget) {
  const double rho = contraction_radius(p.a);
  complex checkpoint = z;
  int window = 2;
  int since = 0;
  for (int n = 0; n <= budget.max_iter; ++n) {
    if (std::abs(z) < rho) return {Fate::attracted, n};
    if (n == budget.max_iter) break;
    z = step(p, z);
    if (!finite(z) || z.real() > budget.escape_real) return {Fate::escaped, n + 1};
    if (std::norm(z - checkpoint) < 1e-20 * std::max(1.0, std::norm(z))) return {Fate::other_cycle, n + 1};
    if (++since == window) {
      checkpoint = z;
      since = 0;
      window *= 2;
    }
  }
  return {Fate::undecided, budget.max_iter};
}

BoettcherChart::BoettcherChart(complex a, ChartOptions options)
    : param_(a), options_(options), rho_(basin::contraction_radius(a)) {
  if (!(options.r_work > 0.0 && options.r_work < 1.0)) throw input_error("r_work must lie in (0, 1)");
  if (!(options.continuation_step > 0.0)) throw input_error("continuation step must be positive");
  constexpr int probes = 64;
  for (int k = 0; k < probes; ++k) {
    const complex z = std::polar(rho_, 2.0 * std::numbers::pi * k / probes);
    if (std::abs(step(param_, z)) > 0.5 * rho_)
      throw numerical_error("contraction disk check failed");
  }
}

PhiJet BoettcherChart::phi_jet(complex z) const {
  const complex half_a = 0.5 * param_.a;
  if (z == complex(0.0, 0.0)) return {0.0, half_a};

  // log phi = log((a/2) z) + sum_k 2^-(k+1) log u_k, u_k = 2 s(z_k), and
  // phi'/phi = 1/z + sum_k 2^-(k+1) (s'/s)(z_k) dz_k/dz.
  complex log_sum{0.0, 0.0};
  complex dlog_sum{0.0, 0.0};
  complex zk = z;
  complex dzk{1.0, 0.0};
  double weight = 0.5;
  bool entered = false;
  const int limit = options_.entry_budget + 80;
  for (int k = 0; k < limit; ++k, weight *= 0.5) {
    if (!entered && std::abs(zk) < rho_) entered = true;
    if (!entered && k >= options_.entry_budget) break;

    const complex s = entire_core_quotient(zk);
    const complex lu = std::log(2.0 * s);
    if (!(std::abs(lu.imag()) < 0.5 * std::numbers::pi))
      throw numerical_error("not in validated basin region");
    const complex dlu = entire_core_quotient_derivative(zk) / s * dzk;
    log_sum += weight * lu;
    dlog_sum += weight * dlu;

    if (entered && weight * std::abs(lu) <= 1e-18 * std::max(1.0, std::abs(log_sum)) &&
        weight * std::abs(dlu) <= 1e-18 * std::max(1.0, std::abs(dlog_sum))) {
      const complex e = std::exp(log_sum);
      return {half_a * z * e, half_a * e * (1.0 + z * dlog_sum)};
    }

    dzk *= param_.a * zk * std::exp(zk);
    zk = step(param_, zk);
    if (!finite(zk) || !finite(dzk) || zk.real() > 50.0) break;
  }
  throw numerical_error("not in validated basin region");
}

complex BoettcherChart::psi(complex w) const {
  const double r = std::abs(w);
  if (r > options_.r_work * (1.0 + 1e-12)) throw domain_error("outside validated chart");
  if (r == 0.0) return {0.0, 0.0};

  const int n_steps = std::max(1, static_cast<int>(std::ceil(r / options_.continuation_step)));
  complex z = (2.0 / param_.a) * w / static_cast<double>(n_steps);
  try {
    for (int j = 1; j <= n_steps; ++j) {
      const complex target = w * (static_cast<double>(j) / n_steps);
      bool converged = false;
      for (int it = 0; it < 50 && !converged; ++it) {
        const PhiJet jet = phi_jet(z);
        const complex dz = (jet.value - target) / jet.derivative;
        if (!finite(dz)) break;
        z -= dz;
        converged = std::abs(dz) <= 4e-16 * std::abs(z);
      }
      if (!converged && std::abs(phi(z) - target) > 1e-12) throw numerical_error("newton stalled");
    }
  } catch (const numerical_error&) {
    throw numerical_error("outside validated chart");
  }
  if (!(std::abs(phi(z) - w) <= 1e-9)) throw numerical_error("outside validated chart");
  return z;
}

complex boettcher_coordinate(complex a, complex z) { return BoettcherChart(a).phi(z); }
complex boettcher_parameter(complex a, complex w) { return BoettcherChart(a).psi(w); }

BasinGrid basin_grid(complex a, const Window& window, int cols, int rows, BasinBudget budget,
                     int workers) {
  window.validate();
  if (cols < 1 || rows < 1) throw input_error("basin grid needs a positive resolution");
  const EntireParam p(a);

  BasinGrid g;
  g.window = window;
  g.cols = cols;
  g.rows = rows;
  const std::size_t n = static_cast<std::size_t>(cols) * rows;
  g.fates.assign(n, Fate::undecided);
  g.steps.assign(n, 0);
  for_each_tile(cols, rows, workers, [&](int c0, int r0, int c1, int r1) {
    for (int r = r0; r < r1; ++r)
      for (int c = c0; c < c1; ++c) {
        const auto f = orbit_fate(p, window.pixel_center(c, r, cols, rows), budget);
        const std::size_t k = static_cast<std::size_t>(r) * cols + c;
        g.fates[k] = f.fate;
        g.steps[k] = f.steps;
      }
  });

  const auto [oc, orow] = window.pixel_of(0.0, cols, rows);
  if (oc >= 0) g.fates[static_cast<std::size_t>(orow) * cols + oc] = Fate::attracted;

  std::vector<std::uint8_t> mask(n);
  for (std::size_t k = 0; k < n; ++k) mask[k] = g.fates[k] == Fate::attracted;
  g.component = label_components(mask, cols, rows, &g.component_count);
  if (oc >= 0) g.immediate = g.component[static_cast<std::size_t>(orow) * cols + oc];
  return g;
}

namespace {

// inside / outside / undecided on one grid resolution
C0Verdict c0_on_grid(complex a, const Window& window, int res, BasinBudget budget) {
  BasinGrid g = basin_grid(a, window, res, res, budget, 1);
  const auto [ac, ar] = window.pixel_of(a, res, res);
  const auto [oc, orow] = window.pixel_of(0.0, res, res);
  const std::size_t ka = static_cast<std::size_t>(ar) * res + ac;
  const std::size_t ko = static_cast<std::size_t>(orow) * res + oc;

  // a itself is known to be attracted, so its pixel is too
  g.fates[ka] = Fate::attracted;
  std::vector<std::uint8_t> mask(g.fates.size());
  for (std::size_t k = 0; k < mask.size(); ++k) mask[k] = g.fates[k] == Fate::attracted;
  auto id = label_components(mask, res, res);
  if (id[ka] == id[ko]) return C0Verdict::inside;

  for (std::size_t k = 0; k < mask.size(); ++k) mask[k] |= g.fates[k] == Fate::undecided;
  id = label_components(mask, res, res);
  return id[ka] == id[ko] ? C0Verdict::undecided : C0Verdict::outside;
}

}  // namespace

C0Verdict in_C0(complex a, C0Options options) {
  const EntireParam p(a);
  const auto fate = orbit_fate(p, a, options.budget);
  if (fate.fate == Fate::undecided) return C0Verdict::undecided;
  if (fate.fate != Fate::attracted) return C0Verdict::outside;

  // Coarse grids can merge small preimage components with the immediate
  // basin (or cut thin necks), so refine until two resolutions agree.
  const Window window = window_around(0.0, a, std::max(1.0, 0.5 * std::abs(a)));
  C0Verdict previous = c0_on_grid(a, window, options.grid, options.budget);
  for (int res = 2 * options.grid; res <= options.max_grid; res *= 2) {
    const C0Verdict current = c0_on_grid(a, window, res, options.budget);
    if (current == previous && current != C0Verdict::undecided) return current;
    previous = current;
  }
  return C0Verdict::undecided;
}

complex motion_H(complex a0, complex a, complex z) {
  return motion_H(BoettcherChart(a0), BoettcherChart(a), z);
}

complex motion_H(const BoettcherChart& base, const BoettcherChart& target, complex z) {
  return target.psi(base.phi(z));
}

complex explosion_H(complex a, complex w) { return BoettcherChart(a).psi(w); }

complex hat_H(complex a, complex w) { return hat_H(BoettcherChart(a), w); }

complex hat_H(const BoettcherChart& chart, complex w) { return 0.5 * chart.a() * chart.psi(w); }

complex preimage_motion(complex a, const families::BasinCenters& centers, int i, complex w) {
  if (i == 0) throw input_error("preimage motion needs a nonzero center index");
  return preimage_motion(BoettcherChart(a), centers[i], w);
}

complex preimage_motion(const BoettcherChart& chart, complex center, complex w) {
  const complex a = chart.a();
  const complex target = chart.psi(w);
  if (target == complex(0.0, 0.0)) return center;

  // f_a(zeta) = target near zeta = center, where f_a'(center) = a z_i e^{z_i}
  const complex seed = center + target / (a * center * std::exp(center));
  complex zeta = seed;
  bool converged = false;
  for (int it = 0; it < 50 && !converged; ++it) {
    const complex dz = (a * families::entire_core(zeta) - target) / (a * zeta * std::exp(zeta));
    if (!finite(dz)) break;
    zeta -= dz;
    converged = std::abs(dz) <= 4e-16 * std::abs(zeta);
  }
  const double drift = std::abs(zeta - seed);
  if (!converged || drift > 0.5 * std::abs(seed - center) + 1e-13 * std::abs(center))
    throw numerical_error("branch escape");
  return zeta;
}

complex g_a(complex a, complex z) {
  return 0.5 * a * families::eval_entire(EntireParam(a), 2.0 * z / a);
}

double g_a_error_bound(complex a, complex z) {
  if (a == complex(0.0, 0.0)) throw domain_error("g_a requires a != 0");
  return std::abs(4.0 * z * z * z / (3.0 * a)) * std::exp(std::abs(2.0 * z / a));
}

}  // namespace holomove::basin
