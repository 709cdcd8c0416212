#include <cstdio>

#include "birmap/verify.hpp"

// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
int main() {
  birmap::VerifyOptions opts;
  opts.on_result = [](const birmap::VerifyResult& r) {
    std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.detail.c_str());
    std::fflush(stdout);
  };
  auto results = birmap::run_acceptance(opts);
  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
