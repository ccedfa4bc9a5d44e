#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace slitbm {

/// One named invariant check: observed discrepancy against its tolerance.
struct CheckResult {
    std::string name;
    bool passed = false;
    double observed = 0.0;  // discrepancy measure (relative or absolute)
    double tolerance = 0.0; // bound it must stay below
    std::string note;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Options for the Monte Carlo-backed checks.
struct VerifyOptions {
    double tol = 0.0; // > 0 overrides the default tolerance of exact checks
    std::uint64_t seed = 20240u;
    long mc_paths = 20000;  // mc-agreement path count
    double mc_step = 5e-4;  // mc-agreement Euler step
};

const std::vector<std::string>& suite_names();

/// Runs one named suite: kernels, bessel, stable, green, killed, hyperbolic
/// or mc-agreement. Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt = {});

} // namespace slitbm
