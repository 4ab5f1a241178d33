#pragma once

#include <string>
#include <vector>

namespace nlosc {

// One measured clause of a criterion, with a deterministic detail string
// (measured values rendered with the fixed float format, never timings or
// addresses) so whole reports can be compared byte for byte.
struct CheckResult {
    std::string label;
    bool passed = false;
    std::string detail;
};

struct CriterionResult {
    int index = 0;
    std::string title;
    bool passed = false;
    std::vector<CheckResult> checks;
};

// Criterion indices runnable in-process (1..11). Index 12, output
// determinism, needs to spawn the CLI twice and is driven by the acceptance
// binary instead.
std::vector<int> suite_criteria(const std::string& suite);

CriterionResult run_criterion(int index);
std::vector<CriterionResult> run_criteria(const std::vector<int>& indices);

std::string format_report(const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace nlosc
