#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace euclid {

struct CheckOutcome {
    bool passed = false;
    std::string detail;
};

struct SelfTestResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Worked examples and cross-checks over every module, in a fixed order.
/// Sampling uses `seed`; the same seed gives the same table.
std::vector<SelfTestResult> run_selftest(std::uint64_t seed = 42);

/// Runs one check, turning exceptions into failures and recording the time.
SelfTestResult timed_check(const std::string& name, const std::function<CheckOutcome()>& check);

}  // namespace euclid
