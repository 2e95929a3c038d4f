#pragma once

// Superattracting basin of 0 for f_a(z) = a (e^z (z - 1) + 1): orbit fates,
// the Boettcher chart phi_a with its inverse psi_a, the main hyperbolic
// component test, and the motion / explosion maps built from the charts.

#include <cstdint>
#include <vector>

#include "holomove/families.hpp"
#include "holomove/raster.hpp"

namespace holomove::basin {

using families::EntireParam;

/// Radius 1/(2 + 2|a|) of the disk on which |f_a(z)| <= |z|/2.
double contraction_radius(complex a);

// ---------------------------------------------------------------------------
// Orbit fates

enum class Fate : std::uint8_t { attracted, escaped, other_cycle, undecided };

struct BasinBudget {
  int max_iter = 500;
  double escape_real = 50.0;  // Re z beyond this overflows f_a at the next step
};

struct FateResult {
  Fate fate;
  int steps;
};

/// Iterates f_a from z: attracted once inside the contraction disk, escaped
/// past Re z = escape_real or on overflow, other_cycle when a Brent
/// checkpoint repeats to 1e-10 relative, undecided at the budget.
FateResult orbit_fate(const EntireParam& p, complex z, BasinBudget budget = {});

// ---------------------------------------------------------------------------
// Boettcher chart

struct ChartOptions {
  double r_work = 0.8;             // charts are validated on |w| <= r_work
  double continuation_step = 0.05; // radial Newton continuation for psi
  int entry_budget = 200;          // iterations allowed to reach the contraction disk
};

struct PhiJet {
  complex value;
  complex derivative;
};

class BoettcherChart {
 public:
  /// Verifies |f_a(z)| <= |z|/2 on the contraction circle; throws
  /// numerical_error otherwise and domain_error for a = 0.
  explicit BoettcherChart(complex a, ChartOptions options = {});

  complex a() const noexcept { return param_.a; }
  double contraction_radius() const noexcept { return rho_; }
  double inner_radius() const noexcept { return options_.r_work; }

  /// phi_a(z) = (a/2) z prod_k u_k^(2^-(k+1)) with u_k = f_a(z_k) / ((a/2) z_k^2).
  /// Throws numerical_error("not in validated basin region") when the orbit
  /// misses the contraction disk or a factor leaves the principal sheet.
  complex phi(complex z) const { return phi_jet(z).value; }
  PhiJet phi_jet(complex z) const;

  /// psi_a(w) by Newton on phi, seeded at (2/a) w and continued radially.
  /// Throws numerical_error("outside validated chart") on failure and
  /// domain_error for |w| > r_work.
  complex psi(complex w) const;

 private:
  EntireParam param_;
  ChartOptions options_;
  double rho_;
};

complex boettcher_coordinate(complex a, complex z);
complex boettcher_parameter(complex a, complex w);

// ---------------------------------------------------------------------------
// Basin grids and the main hyperbolic component

struct BasinGrid {
  Window window;
  int cols = 0;
  int rows = 0;
  std::vector<Fate> fates;
  std::vector<int> steps;
  /// 4-connected component id among attracted pixels, -1 elsewhere.
  std::vector<int> component;
  int component_count = 0;
  /// Component of the pixel containing 0, or -1 when 0 is off the window.
  int immediate = -1;

  bool in_immediate_basin(int col, int row) const {
    return immediate >= 0 && component[static_cast<std::size_t>(row) * cols + col] == immediate;
  }
};

/// Classifies every pixel center of the window. The pixel containing the
/// fixed point 0 always counts as attracted.
BasinGrid basin_grid(complex a, const Window& window, int cols, int rows, BasinBudget budget = {},
                     int workers = 1);

enum class C0Verdict { inside, outside, undecided };

struct C0Options {
  BasinBudget budget;
  int grid = 64;       // first grid resolution
  int max_grid = 256;  // doubled up to this
};

/// a in C0 when the asymptotic value a is attracted to 0 and its pixel is
/// 4-connected to the pixel of 0 through attracted pixels, on the window
/// spanning 0 and a with margin max(1, |a|/2). The grid is doubled until two
/// consecutive resolutions give the same decided verdict; otherwise the
/// result is undecided. Grid connectivity only approximates topological
/// connectivity.
C0Verdict in_C0(complex a, C0Options options = {});

// ---------------------------------------------------------------------------
// Motion and explosion of the immediate basin

/// H(a, z) = psi_a(phi_a0(z)).
complex motion_H(complex a0, complex a, complex z);
complex motion_H(const BoettcherChart& base, const BoettcherChart& target, complex z);

/// Explosion map: psi_a(w).
complex explosion_H(complex a, complex w);
/// Normalized motion (a/2) psi_a(w): fixes 0 with derivative 1.
complex hat_H(complex a, complex w);
complex hat_H(const BoettcherChart& chart, complex w);

/// Inverse branch of f_a near the center z_i applied to psi_a(w). Throws
/// numerical_error("branch escape") if Newton wanders off the branch.
complex preimage_motion(complex a, const families::BasinCenters& centers, int i, complex w);
complex preimage_motion(const BoettcherChart& chart, complex center, complex w);

/// g_a(z) = (a/2) f_a(2z/a), which tends to z^2 as |a| grows.
complex g_a(complex a, complex z);
/// |4 z^3 / (3a)| exp(|2z/a|), an upper bound for |g_a(z) - z^2|.
double g_a_error_bound(complex a, complex z);

}  // namespace holomove::basin
