#include "holomove/complex_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "holomove/errors.hpp"

namespace holomove {

namespace {

constexpr int min_integration_samples = 16;

// exp(2*pi*i*t/m) for integer t; exact at multiples of a quarter turn.
complex root_of_unity(long long t, int m) {
  long long r = t % m;
  if (r < 0) r += m;
  if ((4 * r) % m == 0) {
    switch ((4 * r) / m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / m;
  return {std::cos(angle), std::sin(angle)};
}

std::vector<complex> root_table(int m) {
  std::vector<complex> table(m);
  for (int t = 0; t < m; ++t) table[t] = root_of_unity(t, m);
  return table;
}

void require_integration_contour(std::span<const complex> values, const CircleContour& c) {
  if (c.samples() < min_integration_samples)
    throw input_error("contour integration needs at least 16 samples");
  if (static_cast<int>(values.size()) != c.samples())
    throw input_error("sample count " + std::to_string(values.size()) +
                      " does not match contour samples " + std::to_string(c.samples()));
}

// beta_t = (1/m) sum_j F_j u_j^{-t}: amplitude of mode t on the unit circle
// parametrization, so that F(p_j) = sum_t beta_t u_j^t.
complex mode_amplitude(std::span<const complex> values, const CircleContour& c,
                       const std::vector<complex>& roots, int t) {
  const int m = c.samples();
  complex acc{0.0, 0.0};
  for (int j = 0; j < m; ++j) {
    long long idx = (-static_cast<long long>(t) * c.sign() * j) % m;
    if (idx < 0) idx += m;
    acc += values[j] * roots[static_cast<std::size_t>(idx)];
  }
  return acc / static_cast<double>(m);
}

}  // namespace

std::string format_complex(complex z, int digits) {
  char buf[96];
  const double im = z.imag();
  std::snprintf(buf, sizeof buf, "%.*g%s%.*gi", digits, z.real(),
                (std::signbit(im) || std::isnan(im)) ? "" : "+", digits, im);
  return buf;
}

CircleContour::CircleContour(complex center, double radius, int samples, Orientation orientation)
    : center_(center), radius_(radius), samples_(samples), orientation_(orientation) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw input_error("contour radius must be positive");
  if (samples < 4) throw input_error("contour needs at least 4 samples");
  if (!std::isfinite(center.real()) || !std::isfinite(center.imag()))
    throw input_error("contour center must be finite");
}

complex CircleContour::unit(int k) const {
  return root_of_unity(static_cast<long long>(sign()) * k, samples_);
}

CircleContour CircleContour::reversed() const {
  return CircleContour(center_, radius_, samples_,
                       orientation_ == Orientation::positive ? Orientation::negative
                                                             : Orientation::positive);
}

std::vector<complex> contour_points(const CircleContour& c) {
  std::vector<complex> pts(c.samples());
  for (int k = 0; k < c.samples(); ++k) pts[k] = c.point(k);
  return pts;
}

std::vector<complex> sample_on(const CircleContour& c, const std::function<complex(complex)>& f) {
  std::vector<complex> out(c.samples());
  for (int k = 0; k < c.samples(); ++k) out[k] = f(c.point(k));
  return out;
}

std::vector<complex> reorient(std::span<const complex> values) {
  const std::size_t m = values.size();
  std::vector<complex> out(m);
  for (std::size_t k = 0; k < m; ++k) out[k] = values[(m - k) % m];
  return out;
}

LaurentWindow::LaurentWindow(std::vector<complex> coefficients, int n_max, double scale,
                             CircleContour contour)
    : coefficients_(std::move(coefficients)), n_max_(n_max), scale_(scale), contour_(contour) {}

complex LaurentWindow::operator[](int k) const {
  if (k < -n_max_ || k > n_max_) throw input_error("Laurent index outside window");
  return coefficients_[static_cast<std::size_t>(k + n_max_)];
}

double LaurentWindow::mode(int k) const {
  return std::abs((*this)[k]) * std::pow(contour_.radius(), k);
}

double LaurentWindow::max_negative_mode() const {
  double best = 0.0;
  for (int k = 1; k <= n_max_; ++k) best = std::max(best, mode(-k));
  return best;
}

LaurentWindow laurent_coefficients(std::span<const complex> values, const CircleContour& c,
                                   int n_max) {
  require_integration_contour(values, c);
  if (n_max < 0 || 2 * n_max + 1 > c.samples())
    throw input_error("Laurent window wider than the sample count allows");

  const auto roots = root_table(c.samples());
  double scale = 0.0;
  for (const auto& v : values) scale = std::max(scale, std::abs(v));

  std::vector<complex> coeffs(static_cast<std::size_t>(2 * n_max + 1));
  for (int k = -n_max; k <= n_max; ++k) {
    coeffs[static_cast<std::size_t>(k + n_max)] =
        mode_amplitude(values, c, roots, k) * std::pow(c.radius(), -k);
  }
  return LaurentWindow(std::move(coeffs), n_max, scale, c);
}

std::vector<complex> spectral_derivative(std::span<const complex> values, const CircleContour& c) {
  require_integration_contour(values, c);
  const int m = c.samples();
  const auto roots = root_table(m);

  // Modes t in (-m/2, m/2); the Nyquist mode carries no derivative.
  const int half = m / 2;
  const int lo = (m % 2 == 0) ? -half + 1 : -half;
  std::vector<complex> weighted;
  weighted.reserve(static_cast<std::size_t>(half - lo + 1));
  for (int t = lo; t <= half; ++t) {
    if (m % 2 == 0 && t == half) {
      weighted.emplace_back(0.0, 0.0);
      continue;
    }
    weighted.push_back(static_cast<double>(t) * mode_amplitude(values, c, roots, t));
  }

  std::vector<complex> out(m);
  for (int j = 0; j < m; ++j) {
    complex acc{0.0, 0.0};
    for (int t = lo; t <= half; ++t) {
      long long idx = (static_cast<long long>(t) * c.sign() * j) % m;
      if (idx < 0) idx += m;
      acc += weighted[static_cast<std::size_t>(t - lo)] * roots[static_cast<std::size_t>(idx)];
    }
    // d/dlambda = (1/(i (lambda - c))) d/dtheta along the circle, and the
    // mode t contributes i t beta_t u^t to d/dtheta.
    out[j] = acc / (c.radius() * c.unit(j));
  }
  return out;
}

WindingResult winding_count(std::span<const complex> f_values,
                            std::span<const complex> fprime_values, const CircleContour& c,
                            complex target) {
  require_integration_contour(f_values, c);
  if (fprime_values.size() != f_values.size())
    throw input_error("derivative samples do not match value samples");

  const int m = c.samples();
  complex acc{0.0, 0.0};
  for (int j = 0; j < m; ++j) {
    acc += fprime_values[j] / (f_values[j] - target) * (c.point(j) - c.center());
  }
  const complex raw = acc * (static_cast<double>(c.sign()) / m);
  if (!std::isfinite(raw.real()) || !std::isfinite(raw.imag()))
    throw numerical_error("contour too coarse or target on curve");
  const double nearest = std::round(raw.real());
  const double residual = std::abs(raw - complex(nearest, 0.0));
  if (residual > winding_snap_tolerance)
    throw numerical_error("contour too coarse or target on curve (residual " +
                          std::to_string(residual) + ")");
  return {static_cast<int>(nearest), residual, raw};
}

complex newton_root(const std::function<complex(complex)>& f,
                    const std::function<complex(complex)>& fprime, complex guess,
                    NewtonOptions options) {
  complex z = guess;
  for (int it = 0; it <= options.max_iter; ++it) {
    const complex fz = f(z);
    if (!std::isfinite(fz.real()) || !std::isfinite(fz.imag())) break;
    if (std::abs(fz) < options.tol) return z;
    if (it == options.max_iter) break;
    const complex d = fprime(z);
    if (d == complex(0.0, 0.0) || !std::isfinite(d.real()) || !std::isfinite(d.imag())) break;
    z -= fz / d;
  }
  throw numerical_error("no convergence from guess");
}

Polynomial::Polynomial(std::vector<complex> coefficients) : coefficients_(std::move(coefficients)) {}

complex Polynomial::operator()(complex z) const {
  complex acc{0.0, 0.0};
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coefficients_.size() <= 1) return Polynomial{};
  std::vector<complex> d(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k)
    d[k - 1] = static_cast<double>(k) * coefficients_[k];
  return Polynomial(std::move(d));
}

}  // namespace holomove
