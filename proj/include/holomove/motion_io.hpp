#pragma once

// Text formats for MotionSample: a versioned JSON document (bit-exact round
// trip, optional contour) and a plain CSV value table.

#include <filesystem>
#include <optional>
#include <string>

#include "holomove/motion_lab.hpp"

namespace holomove::motion {

inline constexpr int motion_format_version = 1;

struct MotionDocument {
  MotionSample sample;
  std::optional<CircleContour> contour;  // where the samples were taken, if on a circle
};

std::string to_json(const MotionDocument& doc);
MotionDocument from_json(const std::string& text);  // throws input_error

void write_json(const std::filesystem::path& path, const MotionDocument& doc);
MotionDocument read_json(const std::filesystem::path& path);

/// Header "lambda_re,lambda_im,H0_re,H0_im,...", one row per parameter, %.17g.
std::string to_csv(const MotionSample& m);
/// The CSV carries values only: E is read off the row at `base`, which must
/// be present.
MotionSample from_csv(const std::string& text, complex base, complex marked, bool marked_at_infinity,
                      bool e_connected);

}  // namespace holomove::motion
