#pragma once

// Pixel grids over rectangles of the complex plane: window geometry, a
// deterministic tile scheduler and 4-connected component labelling.

#include <cstdint>
#include <functional>
#include <vector>

#include "holomove/complex_kernel.hpp"

namespace holomove {

/// Axis-aligned rectangle. Row 0 of a grid is the top edge (y_max) and pixel
/// samples are taken at pixel centers.
struct Window {
  double x_min = -2.0;
  double x_max = 2.0;
  double y_min = -2.0;
  double y_max = 2.0;

  void validate() const;  // throws input_error on a degenerate window
  double width() const noexcept { return x_max - x_min; }
  double height() const noexcept { return y_max - y_min; }
  complex pixel_center(int col, int row, int cols, int rows) const noexcept;
  /// Pixel containing z, or {-1, -1} when z lies outside the window.
  std::pair<int, int> pixel_of(complex z, int cols, int rows) const noexcept;

  bool operator==(const Window&) const = default;
};

/// Rectangle covering both points with `margin` on every side.
Window window_around(complex p, complex q, double margin);

inline constexpr int tile_size = 64;

/// Calls fn(col0, row0, col1, row1) once for every 64x64 tile of a
/// cols x rows grid (half-open bounds). Tiles are claimed from an atomic
/// counter by up to `workers` threads; fn must only write pixels of its own
/// tile, which makes the result independent of scheduling.
void for_each_tile(int cols, int rows, int workers,
                   const std::function<void(int, int, int, int)>& fn);

/// Worker count from HOLOMOVE_WORKERS, else the hardware concurrency.
int default_workers();

/// 4-connected components of pixels where member[k] is true. Returns one id
/// per pixel (-1 for non-members); ids follow row-major first appearance.
std::vector<int> label_components(const std::vector<std::uint8_t>& member, int cols, int rows,
                                  int* count = nullptr);

/// Pixels reachable from the grid border through pixels where passable[k].
std::vector<std::uint8_t> reachable_from_border(const std::vector<std::uint8_t>& passable, int cols,
                                                int rows);

}  // namespace holomove
