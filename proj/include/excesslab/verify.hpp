#pragma once

#include <string>
#include <vector>

namespace excesslab {

struct CheckResult {
    std::string name;
    bool passed = false;
    double seconds = 0;
    std::string detail;
};

/// Runs the cross-module verification suite. quick = exact-arithmetic
/// identities only; full adds asymptotic trend checks and Monte Carlo.
/// threads caps simulation parallelism (0 = hardware concurrency).
std::vector<CheckResult> verify_checks(bool full, int threads = 0);

}  // namespace excesslab
