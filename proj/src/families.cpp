#include "holomove/families.hpp"

#include <algorithm>
#include <numbers>

#include "holomove/errors.hpp"

namespace holomove::families {

namespace {

constexpr double series_radius = 0.5;
constexpr int series_terms = 22;

// coefficient of z^(n-2) in (e^z (z-1) + 1) / z^2, i.e. (n-1)/n!
struct QuotientSeries {
  std::array<double, series_terms> c{};
  constexpr QuotientSeries() {
    double fact = 1.0;
    for (int n = 2; n < series_terms + 2; ++n) {
      fact *= n;
      c[n - 2] = (n - 1) / fact;
    }
  }
};
constexpr QuotientSeries quotient_series{};

bool finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

EntireParam::EntireParam(complex a_) : a(a_) {
  if (a == complex(0.0, 0.0)) throw domain_error("entire family requires a != 0");
}

complex entire_core_quotient(complex z) {
  if (std::abs(z) < series_radius) {
    complex acc{0.0, 0.0};
    for (int k = series_terms - 1; k >= 0; --k) acc = acc * z + quotient_series.c[k];
    return acc;
  }
  return (std::exp(z) * (z - 1.0) + 1.0) / (z * z);
}

complex entire_core_quotient_derivative(complex z) {
  if (std::abs(z) < series_radius) {
    complex acc{0.0, 0.0};
    for (int k = series_terms - 1; k >= 1; --k) acc = acc * z + static_cast<double>(k) * quotient_series.c[k];
    return acc;
  }
  const complex ez = std::exp(z);
  const complex h = ez * (z - 1.0) + 1.0;
  return (z * z * ez - 2.0 * h) / (z * z * z);
}

complex entire_core(complex z) {
  if (std::abs(z) < series_radius) return z * z * entire_core_quotient(z);
  return std::exp(z) * (z - 1.0) + 1.0;
}

complex eval_entire(const EntireParam& p, complex z) {
  if (is_infinite(z)) return infinity;
  const complex v = p.a * entire_core(z);
  return finite(v) ? v : infinity;
}

complex eval_entire_derivative(const EntireParam& p, complex z) {
  const complex v = p.a * z * std::exp(z);
  return finite(v) ? v : infinity;
}

RationalParam::RationalParam(complex lambda_, complex A_, SqrtBranch branch_)
    : lambda(lambda_), A(A_), branch(branch_) {
  if (lambda == complex(0.0, 0.0)) throw domain_error("rational family requires lambda != 0");
}

complex RationalParam::sqrt_A() const {
  const complex r = std::sqrt(A);
  return branch == SqrtBranch::principal ? r : -r;
}

RationalParam RationalParam::flipped() const {
  return RationalParam(lambda, A,
                       branch == SqrtBranch::principal ? SqrtBranch::negated : SqrtBranch::principal);
}

complex eval_G(const RationalParam& p, complex z) {
  if (is_infinite(z) || z == complex(0.0, 0.0)) return infinity;
  const complex v = (z + p.sqrt_A() + 1.0 / z) / p.lambda;
  return finite(v) ? v : infinity;
}

complex eval_G_derivative(const RationalParam& p, complex z) {
  if (z == complex(0.0, 0.0)) return infinity;
  return (1.0 - 1.0 / (z * z)) / p.lambda;
}

complex eval_R(complex lambda, complex mu, complex z) {
  if (is_infinite(z)) return infinity;
  const complex den = 1.0 + lambda * z;
  if (den == complex(0.0, 0.0)) return infinity;
  return z * (z + mu) / den;
}

complex eval_Q(complex c, complex z) {
  if (is_infinite(z)) return infinity;
  return z * z + c;
}

complex eval_blaschke(complex lambda, complex z) {
  if (is_infinite(z)) return infinity;
  const complex den = 1.0 + lambda * z;
  if (den == complex(0.0, 0.0)) return infinity;
  return z * (z + std::conj(lambda)) / den;
}

QuadraticRoots solve_quadratic(complex a, complex b, complex c) {
  const complex zero{0.0, 0.0};
  if (a == zero) {
    if (b == zero) throw input_error("quadratic degenerates to a constant");
    return {-c / b, infinity};
  }
  const complex disc = std::sqrt(b * b - 4.0 * a * c);
  // pick the sign that avoids cancellation in b + sqrt(disc)
  const complex sum = (std::real(std::conj(b) * disc) >= 0.0) ? b + disc : b - disc;
  const complex q = -0.5 * sum;
  if (q == zero) return {zero, zero};
  return {q / a, c / q};
}

FixedPointData fixed_points_G(const RationalParam& p) {
  // With u = 1/z the finite fixed-point equation (1 - l) z^2 + sqrt(A) z + 1 = 0
  // becomes u^2 + sqrt(A) u + (1 - l) = 0, which stays monic when l = 1; a
  // root u = 0 is a fixed point colliding with infinity.
  const complex l = p.lambda;
  const auto u = solve_quadratic(1.0, p.sqrt_A(), 1.0 - l);

  FixedPointData d;
  d.points[0] = infinity;
  d.multipliers[0] = l;
  const std::array<complex, 2> us{u.first, u.second};
  for (int k = 0; k < 2; ++k) {
    const complex uk = us[static_cast<std::size_t>(k)];
    if (uk == complex(0.0, 0.0)) {
      d.points[static_cast<std::size_t>(k + 1)] = infinity;
      d.collision_at_infinity = true;
    } else {
      d.points[static_cast<std::size_t>(k + 1)] = 1.0 / uk;
    }
    d.multipliers[static_cast<std::size_t>(k + 1)] = (1.0 - uk * uk) / l;
  }
  const auto& m = d.multipliers;
  d.sigma1 = m[0] + m[1] + m[2];
  d.sigma2 = m[0] * m[1] + m[0] * m[2] + m[1] * m[2];
  d.sigma3 = m[0] * m[1] * m[2];
  return d;
}

complex sigma_of_A(complex lambda, complex A) {
  if (lambda == complex(0.0, 0.0)) throw domain_error("sigma_of_A requires lambda != 0");
  const complex t = lambda - 2.0;
  return (t * t - A) / (lambda * lambda);
}

complex A_of_mu(complex lambda, complex mu) {
  const complex den = 1.0 - lambda * mu;
  if (den == complex(0.0, 0.0)) throw domain_error("A_of_mu requires 1 - lambda mu != 0");
  const complex t = lambda - 2.0;
  return t * t - lambda * lambda * mu * (2.0 - lambda - mu) / den;
}

MuSolutions mu_of_A(complex lambda, complex A) {
  // mu (2 - l - mu) = sigma (1 - l mu)  <=>  mu^2 - (2 - l + sigma l) mu + sigma = 0
  const complex s = sigma_of_A(lambda, A);
  const complex b = -(2.0 - lambda + s * lambda);
  const auto r = solve_quadratic(1.0, b, s);
  const complex disc = b * b - 4.0 * s;
  const double size = std::max({1.0, std::norm(b), std::abs(4.0 * s)});

  MuSolutions out;
  if (std::abs(disc) <= 1e-14 * size) {
    const complex root = -0.5 * b;
    out.first = out.second = root;
    out.degenerate = true;
    return out;
  }
  auto lex_less = [](complex x, complex y) {
    return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
  };
  out.first = r.first;
  out.second = r.second;
  if (lex_less(out.second, out.first)) std::swap(out.first, out.second);
  return out;
}

complex sigma_quadratic(complex c) { return 4.0 * c; }

BasinCenters::BasinCenters(std::vector<complex> upper) : upper_(std::move(upper)) {}

complex BasinCenters::operator[](int i) const {
  if (i == 0) return {0.0, 0.0};
  const int n = std::abs(i);
  if (n > count()) throw input_error("basin center index outside computed range");
  const complex z = upper_[static_cast<std::size_t>(n - 1)];
  return i > 0 ? z : std::conj(z);
}

std::vector<complex> BasinCenters::ordered() const {
  std::vector<complex> out;
  out.reserve(static_cast<std::size_t>(2 * count() + 1));
  for (int i = -count(); i <= count(); ++i) out.push_back((*this)[i]);
  return out;
}

BasinCenters basin_centers(int count) {
  if (count < 0) throw input_error("basin_centers count must be nonnegative");
  if (count == 0) return BasinCenters({});

  auto h = [](complex z) { return std::exp(z) * (z - 1.0) + 1.0; };
  auto dh = [](complex z) { return z * std::exp(z); };

  // Zeros sit near i(2k+1)pi - log(i(2k+1)pi), one per horizontal strip of
  // height 2 pi; scan until enough strips are covered.
  double top = 2.0 * std::numbers::pi * (count + 1);
  for (int attempt = 0; attempt < 4; ++attempt, top *= 2.0) {
    const double left = -4.0 - std::log(top);
    const double right = 2.0;
    const double bottom = 0.5;
    const double step = 0.05;
    const int nx = static_cast<int>((right - left) / step) + 1;
    const int ny = static_cast<int>((top - bottom) / step) + 1;

    std::vector<double> mag(static_cast<std::size_t>(nx) * ny);
    auto at = [&](int i, int j) -> double& { return mag[static_cast<std::size_t>(j) * nx + i]; };
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) at(i, j) = std::abs(h({left + i * step, bottom + j * step}));

    std::vector<complex> roots;
    for (int j = 1; j + 1 < ny; ++j) {
      for (int i = 1; i + 1 < nx; ++i) {
        const double v = at(i, j);
        bool is_min = v < 1.0;
        for (int dj = -1; dj <= 1 && is_min; ++dj)
          for (int di = -1; di <= 1 && is_min; ++di)
            if ((di || dj) && at(i + di, j + dj) < v) is_min = false;
        if (!is_min) continue;
        complex z;
        try {
          z = newton_root(h, dh, {left + i * step, bottom + j * step}, {1e-13, 60});
        } catch (const numerical_error&) {
          continue;
        }
        if (z.imag() < 0.25) continue;  // z_0 = 0 (double root) or a conjugate
        const bool dup = std::any_of(roots.begin(), roots.end(),
                                     [&](complex r) { return std::abs(r - z) < 1e-6; });
        if (!dup) roots.push_back(z);
      }
    }
    std::sort(roots.begin(), roots.end(), [](complex x, complex y) { return x.imag() < y.imag(); });
    if (static_cast<int>(roots.size()) >= count) {
      roots.resize(static_cast<std::size_t>(count));
      for (auto& z : roots) {
        // one more Newton step from a converged point only polishes
        const complex step_z = h(z) / dh(z);
        if (std::abs(h(z - step_z)) <= std::abs(h(z))) z -= step_z;
        if (std::abs(h(z)) >= 1e-10) throw numerical_error("basin center failed to polish");
      }
      return BasinCenters(std::move(roots));
    }
  }
  throw numerical_error("basin center scan did not find enough zeros");
}

OrbitVerdict orbit_bounded_Q(complex c, complex z0, OrbitOptions options) {
  return iterate_orbit([c](complex z) { return z * z + c; }, z0, options);
}

OrbitVerdict orbit_bounded_G(const RationalParam& p, complex z0, OrbitOptions options) {
  const complex b = p.sqrt_A();
  const complex inv_l = 1.0 / p.lambda;
  return iterate_orbit(
      [b, inv_l](complex z) {
        if (z == complex(0.0, 0.0)) return infinity;
        return (z + b + 1.0 / z) * inv_l;
      },
      z0, options);
}

bool in_connectedness_locus(const RationalParam& p, OrbitOptions options) {
  return orbit_bounded_G(p, 1.0, options).kind == OrbitKind::bounded ||
         orbit_bounded_G(p, -1.0, options).kind == OrbitKind::bounded;
}

}  // namespace holomove::families
