#pragma once

// Contour sampling, trapezoid-rule Cauchy/Laurent extraction, argument
// principle counting and Newton iteration on the complex plane.

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace holomove {

using complex = std::complex<double>;

/// "re+imi" with `digits` significant digits, e.g. "0+0i" or "-2.5-1e-08i".
std::string format_complex(complex z, int digits = 15);

enum class Orientation { positive, negative };

/// Equispaced samples on a circle. Point k is
/// center + radius * exp(2*pi*i*k/m * sign(orientation)).
class CircleContour {
 public:
  static constexpr int default_samples = 256;

  CircleContour(complex center, double radius, int samples = default_samples,
                Orientation orientation = Orientation::positive);

  complex center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  int samples() const noexcept { return samples_; }
  Orientation orientation() const noexcept { return orientation_; }
  int sign() const noexcept { return orientation_ == Orientation::positive ? 1 : -1; }

  /// exp(2*pi*i*k/m * sign), exact at quarter turns.
  complex unit(int k) const;
  complex point(int k) const { return center_ + radius_ * unit(k); }

  /// Same circle traversed the other way. Point k of the result is point
  /// (m - k) mod m of this contour.
  CircleContour reversed() const;

  bool operator==(const CircleContour&) const = default;

 private:
  complex center_;
  double radius_;
  int samples_;
  Orientation orientation_;
};

std::vector<complex> contour_points(const CircleContour& c);

/// Evaluates f at every contour point.
std::vector<complex> sample_on(const CircleContour& c, const std::function<complex(complex)>& f);

/// Reindexes samples taken on `c` so they match `c.reversed()`.
std::vector<complex> reorient(std::span<const complex> values);

/// Laurent coefficients a_k, k in [-n_max, n_max], of a function sampled on a
/// circle. Coefficients are the standard ones (expansion in powers of
/// (lambda - center)) for either orientation.
class LaurentWindow {
 public:
  LaurentWindow(std::vector<complex> coefficients, int n_max, double scale, CircleContour contour);

  int n_max() const noexcept { return n_max_; }
  double scale() const noexcept { return scale_; }
  const CircleContour& contour() const noexcept { return contour_; }

  complex operator[](int k) const;
  /// |a_k| * r^k: the amplitude of mode k on the contour itself.
  double mode(int k) const;
  /// Largest mode amplitude among negative indices.
  double max_negative_mode() const;

 private:
  std::vector<complex> coefficients_;
  int n_max_;
  double scale_;
  CircleContour contour_;
};

LaurentWindow laurent_coefficients(std::span<const complex> values, const CircleContour& c,
                                   int n_max);

/// Derivative samples from the trigonometric interpolant of `values`.
/// Accurate when the sampled function is analytic in an annulus around the
/// contour.
std::vector<complex> spectral_derivative(std::span<const complex> values, const CircleContour& c);

struct WindingResult {
  int count;
  double residual;  // |raw - count|
  complex raw;
};

/// (1/2 pi i) * contour integral of f'/(f - target), honoring orientation.
/// Positive orientation counts zeros minus poles, negative the reverse.
/// Throws numerical_error when the raw value is further than 1e-3 from an
/// integer.
WindingResult winding_count(std::span<const complex> f_values,
                            std::span<const complex> fprime_values, const CircleContour& c,
                            complex target);

inline constexpr double winding_snap_tolerance = 1e-3;

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 100;
};

complex newton_root(const std::function<complex(complex)>& f,
                    const std::function<complex(complex)>& fprime, complex guess,
                    NewtonOptions options = {});

/// Coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<complex> coefficients);

  const std::vector<complex>& coefficients() const noexcept { return coefficients_; }
  /// -1 for the empty (zero) polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

  complex operator()(complex z) const;
  Polynomial derivative() const;

 private:
  std::vector<complex> coefficients_;
};

}  // namespace holomove
