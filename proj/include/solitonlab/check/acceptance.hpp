#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace solitonlab::check {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    /// Deterministic one-line summary (no timings).
    std::string detail;
};

enum class Suite { symbolic, numeric, all };

Suite parse_suite(std::string_view name);

/// Criteria run by `check --suite ...`. The rerun/byte-identity criterion (10)
/// drives the command-line tool itself and lives in the acceptance binary.
std::vector<int> suite_criteria(Suite suite);

CriterionResult run_criterion(int id);

/// `PASS <id> <name>: <detail>` or `FAIL ...`.
std::string format_result(const CriterionResult& result);

}  // namespace solitonlab::check
