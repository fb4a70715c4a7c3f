// Acceptance gate: runs the full verification suite and prints one line per
// criterion. Exits nonzero if any criterion fails.
#include <algorithm>
#include <cstdio>

#include "framemult/verification.hpp"

int main() {
    const framemult::VerificationReport report =
        framemult::run_verification(framemult::RunConfig{});
    for (const auto& c : report.checks) {
        std::printf("[%s] %s: %s (worst residual %.3e)\n", c.passed ? "PASS" : "FAIL",
                    c.id.c_str(), c.description.c_str(), c.residual);
        if (!c.passed) std::printf("       %s\n", c.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n",
                static_cast<std::size_t>(
                    std::count_if(report.checks.begin(), report.checks.end(),
                                  [](const auto& c) { return c.passed; })),
                report.checks.size());
    return report.all_passed() ? 0 : 1;
}
