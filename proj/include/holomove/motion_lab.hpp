#pragma once

// Holomorphic motions and explosions on sampled data: validity checks, the
// affine normalization through two pivot points, singularity classification
// of trajectories on a contour, and the explosion decomposition
//   H(l, z) = P(l - l*) + (l - l*)^n * Hhat(l, z).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holomove/complex_kernel.hpp"

namespace holomove::motion {

/// Finite set E moved over a finite set of parameters. values holds
/// H(param_points[j], E_points[i]) at j * E_points.size() + i.
struct MotionSample {
  complex base_param{0.0, 0.0};
  std::vector<complex> param_points;
  complex marked_point{0.0, 0.0};
  bool marked_at_infinity = false;
  std::vector<complex> E_points;
  bool e_connected = false;
  std::vector<complex> values;

  std::size_t rows() const noexcept { return param_points.size(); }
  std::size_t cols() const noexcept { return E_points.size(); }
  complex at(std::size_t j, std::size_t i) const { return values[j * cols() + i]; }
  complex& at(std::size_t j, std::size_t i) { return values[j * cols() + i]; }
  std::vector<complex> trajectory(std::size_t i) const;
  std::vector<complex> row(std::size_t j) const;

  bool operator==(const MotionSample&) const = default;
};

/// Builds a sample whose parameters are the contour points; the base
/// parameter should be one of them. provider(l, i) gives H(l, E[i]).
template <class Provider>
MotionSample sample_motion(const CircleContour& c, complex base, complex marked,
                           std::vector<complex> E, bool connected, Provider&& provider) {
  MotionSample m;
  m.base_param = base;
  m.marked_point = marked;
  m.E_points = std::move(E);
  m.e_connected = connected;
  m.param_points = contour_points(c);
  m.values.reserve(m.rows() * m.cols());
  for (complex l : m.param_points)
    for (std::size_t i = 0; i < m.cols(); ++i) m.values.push_back(provider(l, i));
  return m;
}

// ---------------------------------------------------------------------------
// Validity

enum class ViolationKind { shape, base_row, injectivity };

struct Violation {
  ViolationKind kind;
  std::size_t row;  // parameter index
  std::string detail;
};

struct MotionReport {
  std::vector<Violation> violations;
  bool clean() const noexcept { return violations.empty(); }
};

/// Checks the base row (H(l0, z) = z exactly) and row injectivity.
MotionReport validate_motion(const MotionSample& m);

/// |dH/dy - i dH/dx| / max(1, |dH/dx|) by central differences of step h:
/// zero for trajectories holomorphic at l.
double cauchy_riemann_residual(const std::function<complex(complex)>& trajectory, complex l,
                               double h = 1e-5);

struct InjectivityReport {
  bool injective = true;
  std::size_t first = 0;  // a colliding pair when not injective
  std::size_t second = 0;
  double min_separation = 0.0;
};

/// Pairwise separation of a row of values, e.g. the limits at l*.
/// Values closer than tol * max(1, max |value|) collide.
InjectivityReport check_row_injective(const std::vector<complex>& row, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Normalization through pivots z0 = E[i0], z1 = E[i1]

/// Htilde(l, z) = z0 + (z1 - z0) (H(l, z) - H(l, z0)) / (H(l, z1) - H(l, z0)).
MotionSample normalize_tilde(const MotionSample& m, std::size_t i0, std::size_t i1);

struct FGSamples {
  std::vector<complex> f;  // per parameter point
  std::vector<complex> g;
};

/// f = H^{z0} - z0 (H^{z1} - H^{z0}) / (z1 - z0), g = (H^{z1} - H^{z0}) / (z1 - z0),
/// so that H = f + g Htilde.
FGSamples extract_fg(const MotionSample& m, std::size_t i0, std::size_t i1);

/// Pair of E indices with the largest separation; ties keep the first pair
/// in index order.
std::pair<std::size_t, std::size_t> farthest_pivots(const std::vector<complex>& E);

// ---------------------------------------------------------------------------
// Singularity classification

inline constexpr int default_laurent_window = 32;
inline constexpr double significance = 1e-8;

enum class ExtensionKind { holomorphic, pole, essential };

struct ExtendabilityVerdict {
  ExtensionKind kind;
  complex limit{0.0, 0.0};     // holomorphic: value at the puncture
  int order = 0;               // pole: order
  int n_max = 0;               // essential: significant up to this index
  LaurentWindow evidence;
  std::optional<int> winding;  // zeros/poles count, negative orientation

  std::string describe() const;
};

/// Classifies one trajectory sampled on a contour around the puncture.
/// A negative mode k is significant when |a_k| r^k > 1e-8 max(1, scale).
/// Holomorphic and pole verdicts are cross-checked by the argument principle
/// (spectral derivative samples) against the pivot target that the
/// trajectory avoids; disagreement throws numerical_error("inconsistent evidence").
ExtendabilityVerdict classify_extension(std::span<const complex> values, const CircleContour& c,
                                        complex z0, complex z1, int n_max = default_laurent_window);

// ---------------------------------------------------------------------------
// Explosion decomposition

struct ExplosionDecomposition {
  int order = 0;
  Polynomial P;
  std::size_t pivot0 = 0;
  std::size_t pivot1 = 1;
  std::vector<complex> f_taylor;  // coefficients at l*, ascending
  std::vector<complex> g_taylor;
  /// Trajectory values at the puncture.
  std::vector<complex> limits;
  /// Hhat re-based at l*: E_points are Hhat(l*, z), rows the samples.
  MotionSample hatH;
  /// Pairs (Hhat(l*, z), z), samples of the reparametrization psi = Hhat(l*, .)^-1.
  std::vector<std::pair<complex, complex>> psi_samples;
  /// max |H - (P + (l - l*)^n Hhat)| with Hhat from its truncated Taylor series.
  double residual = 0.0;
  /// Parameter coordinate used for the contour: l, or 1/l for a puncture at infinity.
  bool inverted = false;
};

/// Requires m.e_connected and every trajectory holomorphic across the
/// puncture. Contour points must occur among the (possibly inverted)
/// parameter points; its center is the puncture (0 when inverted).
ExplosionDecomposition decompose_explosion(const MotionSample& m, const CircleContour& c,
                                           int n_max = default_laurent_window);
ExplosionDecomposition decompose_explosion(const MotionSample& m, const CircleContour& c,
                                           std::size_t i0, std::size_t i1,
                                           int n_max = default_laurent_window);

/// Parameter points mapped l -> 1/l, puncture moved to 0.
MotionSample invert_parameters(const MotionSample& m);

enum class CorollaryKind { motion_extension, explosion_to };

struct CorollaryVerdict {
  CorollaryKind kind;
  complex z_star{0.0, 0.0};  // explosion point, or unused
};

/// Distinct pivot limits give a motion extension (and require g(l*) != 0);
/// equal ones give an explosion to z* = f(l*), and every limit must equal z*.
CorollaryVerdict corollary_classify(const ExplosionDecomposition& d, double tol = 1e-8);

// ---------------------------------------------------------------------------
// Motions over the whole plane

struct AffinityReport {
  std::vector<double> radii;
  std::vector<double> deviation;  // max |Htilde(l, z) - z| over |l| <= R
};

/// Pivots are the farthest pair of E.
AffinityReport check_affine_over_plane(const MotionSample& m, const std::vector<double>& radii);

}  // namespace holomove::motion
