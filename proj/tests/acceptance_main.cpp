// Acceptance suite: runs every validation criterion at its pinned tolerance
// and prints one pass/fail line per check.  Exit code 0 iff all pass.

#include <cstdio>

#include "casimir/validation.hpp"

int main() {
  using namespace casimir;
  const auto results = validate_all();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %-4s %-60s measured % .6g", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                r.description.c_str(), r.measured);
    if (r.lo < r.hi) std::printf("  window [%g, %g]", r.lo, r.hi);
    std::printf("\n");
    if (!r.passed) {
      ++failed;
      if (!r.note.empty()) std::printf("       note: %s\n", r.note.c_str());
    }
  }
  std::printf("\n%zu checks, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
