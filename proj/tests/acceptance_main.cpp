// Runs every acceptance criterion and prints one line per criterion.

#include <cstdio>

#include "qcong/acceptance.hpp"

int main() {
  bool ok = true;
  for (int n = 1; n <= qcong::kCriterionCount; ++n) {
    qcong::CriterionResult r;
    try {
      r = qcong::run_criterion(n);
    } catch (const std::exception& e) {
      std::printf("criterion %2d FAIL  error: %s\n", n, e.what());
      ok = false;
      continue;
    }
    std::printf("criterion %2d %s  %s (%.2fs)\n", n, r.passed ? "PASS" : "FAIL", r.title.c_str(),
                r.seconds);
    for (const auto& d : r.details) std::printf("              %s\n", d.c_str());
    if (!r.passed) {
      for (const auto& rep : r.reports) {
        if (!rep.passed()) {
          std::printf("              failing: %s %s\n", rep.family.c_str(), rep.description.c_str());
        }
      }
    }
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
