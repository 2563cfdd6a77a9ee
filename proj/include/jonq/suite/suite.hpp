#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "jonq/groebner/limits.hpp"
#include "jonq/ringkit/scalar.hpp"

namespace jonq {

/// Randomized checks are reproducible from (seed, field).
struct SuiteOptions {
    std::uint64_t seed = 1;
    Field field = Field::prime(kDefaultPrime);
    std::uint64_t budget = kDefaultBudget;
    /// Check ids to run; empty runs all of them.
    std::vector<int> only;
};

enum class CheckStatus { Pass, Fail, Budget };

std::string_view status_name(CheckStatus status);

struct CheckResult {
    int id;
    std::string name;
    /// The claim being checked, in one line.
    std::string claim;
    CheckStatus status;
    /// First failed expectations, or the error that stopped the check.
    std::string detail;
    double seconds;
    /// Wall-clock limit in seconds; 0 when unlimited.
    double limit;
};

/// Runs the checks in id order. `on_result` sees each result as it finishes.
std::vector<CheckResult> run_suite(const SuiteOptions& options,
                                   const std::function<void(const CheckResult&)>& on_result = {});

/// 0 when everything passed, 3 when the only problems are budget overruns,
/// 1 otherwise.
int suite_exit_code(const std::vector<CheckResult>& results);

inline constexpr int kCheckCount = 12;

} // namespace jonq
