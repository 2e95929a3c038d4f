#pragma once

// The map families studied here:
//   f_a(z)     = a (e^z (z - 1) + 1)              transcendental entire
//   G_{l,A}(z) = (z + sqrt(A) + 1/z) / l          quadratic rational, fixes infinity with multiplier l
//   R_{l,mu}(z)= z (z + mu) / (1 + l z)
//   Q_c(z)     = z^2 + c
//   B_l(z)     = z (z + conj(l)) / (1 + l z)      Blaschke external class
// together with fixed-point multiplier algebra on Per_1(l).

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "holomove/complex_kernel.hpp"

namespace holomove::families {

/// Point at infinity on the Riemann sphere.
inline const complex infinity{std::numeric_limits<double>::infinity(), 0.0};

inline bool is_infinite(complex z) noexcept {
  return std::isinf(z.real()) || std::isinf(z.imag());
}

// ---------------------------------------------------------------------------
// Transcendental entire family

struct EntireParam {
  complex a;
  explicit EntireParam(complex a);
};

/// e^z (z - 1) + 1, summed as a power series near 0 to avoid cancellation.
complex entire_core(complex z);
/// (e^z (z - 1) + 1) / z^2 and its derivative; equal to 1/2 at z = 0.
complex entire_core_quotient(complex z);
complex entire_core_quotient_derivative(complex z);

/// f_a(z). Overflow yields `infinity`.
complex eval_entire(const EntireParam& p, complex z);
/// f_a'(z) = a z e^z.
complex eval_entire_derivative(const EntireParam& p, complex z);

// ---------------------------------------------------------------------------
// Quadratic rational families

enum class SqrtBranch { principal, negated };

struct RationalParam {
  complex lambda;
  complex A;
  SqrtBranch branch = SqrtBranch::principal;

  RationalParam(complex lambda, complex A, SqrtBranch branch = SqrtBranch::principal);
  complex sqrt_A() const;
  RationalParam flipped() const;
};

complex eval_G(const RationalParam& p, complex z);
complex eval_G_derivative(const RationalParam& p, complex z);
complex eval_R(complex lambda, complex mu, complex z);
complex eval_Q(complex c, complex z);
complex eval_blaschke(complex lambda, complex z);

struct QuadraticRoots {
  complex first;
  complex second;
};

/// Roots of a z^2 + b z + c with the cancellation-free pairing
/// q = -(b + sign * sqrt(b^2 - 4ac)) / 2, roots q/a and c/q.
/// When a == 0 the missing root is reported as `infinity`.
QuadraticRoots solve_quadratic(complex a, complex b, complex c);

struct FixedPointData {
  /// Fixed points; index 0 is infinity (multiplier lambda). A finite root
  /// that collides with infinity is reported as `infinity`.
  std::array<complex, 3> points;
  std::array<complex, 3> multipliers;
  complex sigma1;
  complex sigma2;
  complex sigma3;
  bool collision_at_infinity = false;
};

FixedPointData fixed_points_G(const RationalParam& p);

/// Product of the two fixed-point multipliers other than lambda:
/// ((lambda - 2)^2 - A) / lambda^2.
complex sigma_of_A(complex lambda, complex A);

/// A = (lambda - 2)^2 - lambda^2 mu (2 - lambda - mu) / (1 - lambda mu).
complex A_of_mu(complex lambda, complex mu);

struct MuSolutions {
  complex first;   // lexicographically smaller by (re, im)
  complex second;
  bool degenerate = false;  // double root, `second` duplicates `first`
};

MuSolutions mu_of_A(complex lambda, complex A);

/// Multiplier product of the finite fixed points of z^2 + c: 4c.
complex sigma_quadratic(complex c);

// ---------------------------------------------------------------------------
// Centers of the basin components: zeros of e^z (z - 1) + 1.

class BasinCenters {
 public:
  explicit BasinCenters(std::vector<complex> upper);

  int count() const noexcept { return static_cast<int>(upper_.size()); }
  /// z_i for i in [-count, count]; z_0 = 0 and z_{-i} = conj(z_i).
  complex operator[](int i) const;
  /// All centers ordered by increasing imaginary part.
  std::vector<complex> ordered() const;

 private:
  std::vector<complex> upper_;
};

BasinCenters basin_centers(int count);

// ---------------------------------------------------------------------------
// Orbit boundedness

enum class OrbitKind { bounded, escaped };

struct OrbitVerdict {
  OrbitKind kind;
  int steps;            // escape step, or iterations spent
  bool settled = false; // bounded and caught on a numerically periodic cycle;
                        // false means "undecided-at-budget"
};

struct OrbitOptions {
  int max_iter = 2000;
  double escape_radius = 1e6;
};

inline constexpr OrbitOptions quadratic_orbit_defaults{2000, 2.0};
inline constexpr OrbitOptions rational_orbit_defaults{2000, 1e6};

/// Iterates `map` from z0 until |z| exceeds the escape radius (escaped) or
/// the budget runs out (bounded). Brent-style checkpoints detect attracting
/// cycles early; those verdicts carry settled = true.
template <class Map>
OrbitVerdict iterate_orbit(Map&& map, complex z0, OrbitOptions options) {
  complex z = z0;
  const double r2 = options.escape_radius * options.escape_radius;
  complex checkpoint = z;
  int window = 2;
  int since = 0;
  for (int n = 1; n <= options.max_iter; ++n) {
    z = map(z);
    const double m2 = std::norm(z);
    if (!(m2 <= r2)) return {OrbitKind::escaped, n, false};
    if (std::norm(z - checkpoint) < 1e-26 * std::max(1.0, m2)) return {OrbitKind::bounded, n, true};
    if (++since == window) {
      checkpoint = z;
      since = 0;
      window *= 2;
    }
  }
  return {OrbitKind::bounded, options.max_iter, false};
}

OrbitVerdict orbit_bounded_Q(complex c, complex z0, OrbitOptions options = quadratic_orbit_defaults);
OrbitVerdict orbit_bounded_G(const RationalParam& p, complex z0,
                             OrbitOptions options = rational_orbit_defaults);

/// A in the connectedness locus of G_{lambda, .}: the orbit of 1 or of -1 stays bounded.
bool in_connectedness_locus(const RationalParam& p, OrbitOptions options = rational_orbit_defaults);

}  // namespace holomove::families
