#pragma once

// The fifteen acceptance criteria as callable checks. Each returns a
// pass/fail verdict with a one-line measurement summary.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holomove/atlas.hpp"

namespace holomove::acceptance {

enum class Suite { fast, full };

Suite suite_from_string(const std::string& name);  // throws input_error
std::string to_string(Suite suite);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  /// Wall-clock budget in seconds, 0 when none applies.
  double budget = 0.0;
};

/// State shared between criteria within one run.
struct Context {
  Suite suite = Suite::full;
  int workers = 1;
  /// Render resolution for the figure criteria: 512 (full) or 256 (fast).
  int resolution() const { return suite == Suite::full ? 512 : 256; }
  /// Parameter-plane raster of the main hyperbolic component, rendered once.
  const atlas::RasterClass& c0_raster();

 private:
  std::optional<atlas::RasterClass> c0_;
};

struct Criterion {
  int id;
  std::string name;
  double budget;  // seconds, 0 when unbudgeted
  std::function<CriterionResult(Context&)> run;
};

const std::vector<Criterion>& criteria();

/// Runs every criterion (or those listed in `only`), timing each; a criterion
/// that throws fails with the exception text, and one that overruns its
/// budget fails as well.
std::vector<CriterionResult> run_suite(Context& ctx, const std::vector<int>& only = {},
                                       const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  mu <-> A consistency  (0.01 s)  detail"
std::string format_line(const CriterionResult& r);

}  // namespace holomove::acceptance
