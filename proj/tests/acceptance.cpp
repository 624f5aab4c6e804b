// Acceptance suite: groups the embedded fixtures by criterion and prints
// one pass/fail line per criterion.  Exits nonzero when anything fails.

#include <cstdio>
#include <map>
#include <vector>

#include "sunn/selfcheck.hpp"

int main() {
  const std::vector<sunn::selfcheck::CheckResult> results =
      sunn::selfcheck::run_all();

  std::map<int, std::vector<const sunn::selfcheck::CheckResult*>> grouped;
  for (const auto& r : results) grouped[r.criterion].push_back(&r);

  bool all_passed = true;
  for (int criterion = 1; criterion <= 11; ++criterion) {
    const auto& group = grouped[criterion];
    std::size_t passed = 0;
    for (const auto* r : group)
      if (r->passed) ++passed;
    if (passed == group.size()) {
      std::printf("PASS  criterion %2d: %s (%zu fixtures)\n", criterion,
                  sunn::selfcheck::criterion_title(criterion).c_str(),
                  group.size());
    } else {
      all_passed = false;
      std::printf("FAIL  criterion %2d: %s (%zu of %zu fixtures passed)\n",
                  criterion, sunn::selfcheck::criterion_title(criterion).c_str(),
                  passed, group.size());
      for (const auto* r : group)
        if (!r->passed)
          std::printf("      %s: %s\n", r->name.c_str(), r->detail.c_str());
    }
  }
  return all_passed ? 0 : 1;
}
