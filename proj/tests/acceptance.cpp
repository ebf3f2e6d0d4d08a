#include <cstdio>
#include <cstring>

#include "app/suite.hpp"

using namespace wedgelab::app;

// Runs the fast tier for its timing, then the full tier, and prints one line per criterion.
// Pass --fast to stop after the fast tier.
int main(int argc, char** argv) {
  const bool fast_only = argc > 1 && std::strcmp(argv[1], "--fast") == 0;

  SuiteOptions fast;
  fast.tier = Tier::Fast;
  const SuiteReport f = run_suite(fast);
  std::printf("fast tier: %.1f s, %s\n", f.millis / 1000, f.ok(Tier::Fast) ? "ok" : "failed");
  if (fast_only) {
    for (const auto& r : f.results) std::printf("%s\n", format_result(r, true).c_str());
    return f.ok(Tier::Fast) ? 0 : 1;
  }

  SuiteOptions full;
  full.tier = Tier::Full;
  full.fast_tier_millis = f.millis;
  full.on_result = [](const CriterionResult& r) {
    std::printf("%s\n", format_result(r, true).c_str());
    std::fflush(stdout);
  };
  const SuiteReport report = run_suite(full);
  std::size_t passed = 0;
  for (const auto& r : report.results) passed += r.status == Status::Pass;
  std::printf("%zu/%zu criteria passed in %.1f s\n", passed, report.results.size(), report.millis / 1000);
  return report.ok(Tier::Full) && f.ok(Tier::Fast) ? 0 : 1;
}
