#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framemult/gabor.hpp"

namespace framemult {

struct RunConfig {
    double rank_tol = 1e-10;
    double dual_tol = 1e-9;
    double inverse_tol = 1e-9;
    std::uint64_t seed = 0x5eed;
};

struct CheckResult {
    std::string id;
    std::string description;
    bool passed = false;
    double residual = 0.0;  // worst residual observed by the check
    std::string detail;     // failure notes, empty when passed
};

/// Outcome of the full verification suite; one record per criterion.
struct VerificationReport {
    RunConfig config;
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/// Runs every built-in verification check. Deterministic for a fixed config.
VerificationReport run_verification(const RunConfig& config);

}  // namespace framemult
