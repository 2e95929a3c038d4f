#pragma once

// Command-line front end: RunConfig (key=value text form shared by config
// files and flags) and the subcommand dispatcher.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holomove/raster.hpp"

namespace holomove::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int report_schema_version = 1;

/// "RE,IM", a bare real "RE", or the constant "e-inv" (1/e).
complex parse_complex(const std::string& text);
/// "x_min,x_max,y_min,y_max".
Window parse_window(const std::string& text);

struct RunConfig {
  std::string command;
  std::optional<Window> window;  // unset: the kind's customary window
  int width = 512;
  int height = 512;
  int max_iter = 0;            // 0: the kind's default budget
  double escape_radius = 0.0;  // 0: the kind's default
  complex a{0.0, 0.0};
  complex lambda{0.36787944117144233, 0.0};
  std::string branch = "principal";
  int count = 5;
  std::string source = "app1";
  double radius = 100.0;
  int samples = 256;
  std::string file;
  std::string output;
  std::string labels;
  std::string save;
  std::string report;
  int workers = 0;  // 0: HOLOMOVE_WORKERS or the hardware concurrency
  std::string suite = "fast";
  std::string only;
  std::optional<double> r0;

  /// Sets one key from its text form; throws input_error on an unknown key
  /// or a malformed value. "resolution" sets width and height together.
  void set(const std::string& key, const std::string& value);
  /// Every key in a fixed order, values in their text form.
  std::vector<std::pair<std::string, std::string>> entries() const;
  /// "key=value" lines; parse(print()) reproduces the configuration.
  std::string print() const;
  /// Reads "key=value" lines; blank lines and lines starting with '#' are skipped.
  static RunConfig parse(const std::string& text);

  int effective_workers() const;
  bool operator==(const RunConfig&) const = default;
};

/// Runs the command line (without the program name). Returns 0 on success,
/// 1 when a computation or verification fails and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holomove::cli
