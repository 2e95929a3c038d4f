// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <cstdio>
#include <cstring>
#include <string>

#include "holomove/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace holomove::acceptance;
  Context ctx;
  ctx.workers = holomove::default_workers();
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--suite") == 0 && k + 1 < argc) {
      ctx.suite = suite_from_string(argv[++k]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--suite fast|full]\n");
      return 2;
    }
  }
  int failed = 0;
  run_suite(ctx, {}, [&](const CriterionResult& r) {
    std::printf("%s\n", format_line(r).c_str());
    std::fflush(stdout);
    failed += !r.pass;
  });
  std::printf("%d/%zu criteria passed (%s suite)\n", static_cast<int>(criteria().size()) - failed, criteria().size(),
              to_string(ctx.suite).c_str());
  return failed == 0 ? 0 : 1;
}
