// Runs the full verification suite and prints one line per check.
// Exit status is nonzero if anything fails.

#include <cstdio>

#include "excesslab/verify.hpp"

int main() {
    const auto checks = excesslab::verify_checks(true);
    bool all = true;
    for (const auto& c : checks) {
        all = all && c.passed;
        std::printf("[%s] %-22s (%.1fs) %s\n", c.passed ? "PASS" : "FAIL",
                    c.name.c_str(), c.seconds, c.detail.c_str());
    }
    std::printf("%s: %zu checks\n", all ? "OK" : "FAILED", checks.size());
    return all ? 0 : 1;
}
