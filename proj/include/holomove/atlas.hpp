#pragma once

// Raster classification of parameter and dynamical planes, pixel-set
// geometry on the results, and image / label-dump output.

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "holomove/families.hpp"
#include "holomove/raster.hpp"

namespace holomove::atlas {

enum class RenderKind { param_plane_fa, dyn_plane_fa, locus_G, mandelbrot };

std::string to_string(RenderKind kind);
RenderKind render_kind_from_string(const std::string& name);  // throws input_error

/// Pixel classes. member is C0 (parameter plane), the immediate basin
/// (dynamical plane) or the connectedness locus / Mandelbrot set.
enum Label : std::uint8_t {
  exterior = 0,
  member = 1,
  undecided = 2,
  other_basin = 3,     // attracted to 0 but outside the component of 0
  other_attractor = 4  // caught on some other attracting cycle
};
inline constexpr int label_count = 5;

struct Rgb {
  std::uint8_t r, g, b;
  bool operator==(const Rgb&) const = default;
};
using Palette = std::array<Rgb, label_count>;
Palette default_palette();

struct RenderSpec {
  RenderKind kind = RenderKind::mandelbrot;
  Window window;
  int width = 512;
  int height = 512;
  int max_iter = 0;            // 0 selects the kind's default
  double escape_radius = 0.0;  // 0 selects the kind's default
  complex a{0.0, 0.0};         // dyn_plane_fa
  complex lambda{0.0, 0.0};    // locus_G
  families::SqrtBranch branch = families::SqrtBranch::principal;
  Palette palette = default_palette();

  void validate() const;  // W, H >= 16, non-degenerate window, kind parameters
  int effective_max_iter() const;
  double effective_escape_radius() const;
};

/// The customary window of each kind.
Window default_window(RenderKind kind);

struct RasterClass {
  RenderSpec spec;
  std::vector<std::uint8_t> labels;  // row-major, row 0 at the top
  std::vector<std::int32_t> steps;   // escape or settle step, max_iter when the budget ran out
  int max_iter = 0;                  // budgets actually used
  double escape_radius = 0.0;
  /// Members that stayed bounded through the budget without settling on a
  /// cycle (locus and Mandelbrot kinds).
  std::size_t unsettled_members = 0;

  int width() const noexcept { return spec.width; }
  int height() const noexcept { return spec.height; }
  std::uint8_t at(int col, int row) const {
    return labels[static_cast<std::size_t>(row) * spec.width + col];
  }
  std::size_t count(std::uint8_t label) const;
};

/// Tile-parallel render. Labels do not depend on the worker count.
RasterClass render(const RenderSpec& spec, int workers = default_workers());

/// Largest |pixel center| over pixels with the label; throws input_error if
/// the label is absent.
double bounding_radius(const RasterClass& r, std::uint8_t label);

/// z -> scale z + offset.
struct Affine {
  complex scale{1.0, 0.0};
  complex offset{0.0, 0.0};
  complex operator()(complex z) const { return scale * z + offset; }
};

/// Symmetric Hausdorff distance between transform(pixel centers of A with
/// labelA) and pixel centers of B with labelB. Both sets are placed on a
/// grid aligned with B at the finer of the two pitches and compared with
/// exact Euclidean distance transforms.
double hausdorff_pixels(const RasterClass& A, const RasterClass& B, std::uint8_t labelA,
                        std::uint8_t labelB, Affine transform = {});

/// Whether a lies in the unbounded component of the complement of the
/// member set: accepted outright beyond radius R0, otherwise by a flood
/// fill from the window border through non-member pixels.
bool in_unbounded_complement(const RasterClass& c0, complex a, double R0);

// image_io.cpp

/// Binary PPM: "P6\nW H\n255\n" followed by RGB triples.
std::string encode_ppm(const RasterClass& r);
void write_ppm(const RasterClass& r, const std::filesystem::path& path);
void write_png(const RasterClass& r, const std::filesystem::path& path);
/// uint32 W, uint32 H (little endian), then one label byte per pixel.
std::string encode_label_dump(const RasterClass& r);
void write_label_dump(const RasterClass& r, const std::filesystem::path& path);
/// Chooses PPM or PNG from the extension (.ppm / .png).
void write_image(const RasterClass& r, const std::filesystem::path& path);

}  // namespace holomove::atlas
