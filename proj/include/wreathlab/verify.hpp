#pragma once

#include <string>
#include <vector>

#include "wreathlab/budget.hpp"

namespace wreathlab {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;  // case counts, or the reason for a failure/skip
};

/// Structural-property suites shared by the command-line `verify` command
/// and the acceptance harness. A check that cannot run inside the given
/// caps/budgets reports `skip` (with the reason), never a silent pass.
std::vector<CheckResult> verify_functorial(const Budget& budget = default_budget());
std::vector<CheckResult> verify_towers(const Budget& budget = default_budget());
std::vector<CheckResult> verify_invariants(const Budget& budget = default_budget());
std::vector<CheckResult> verify_suite(const std::string& name,
                                      const Budget& budget = default_budget());

int count_failures(const std::vector<CheckResult>& results);
int count_skips(const std::vector<CheckResult>& results);

}  // namespace wreathlab
