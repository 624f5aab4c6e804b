#pragma once

#include <string>
#include <vector>

/// The embedded verification fixtures: multiplet sizes, reduced sizes,
/// symbolic-table equivalence over random labels, reflection laws, edge
/// laws, degenerate reflection operators, the reduction taxonomy, minimal
/// irreps, dimensions against the pattern-count reference, oracle
/// equivalence and emitter determinism.  The CLI `verify` command and the
/// acceptance suite both run these.
namespace sunn::selfcheck {

struct CheckResult {
  int criterion = 0;  // 1..11
  std::string name;
  bool passed = false;
  std::string detail;  // empty when passed
};

std::vector<CheckResult> run_all();

/// Short description of one criterion group.
std::string criterion_title(int criterion);

}  // namespace sunn::selfcheck
