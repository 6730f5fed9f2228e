#pragma once

#include <string>
#include <vector>

namespace mhdb {

struct CheckResult {
    std::string name;
    double worst = 0.0;      ///< largest relative residual over all trials
    double tolerance = 0.0;
    bool passed() const noexcept { return worst <= tolerance; }
};

/// Operator identities on random divergence-free fields inside the dealiasing band:
/// Leray idempotence and self-adjointness, skew-symmetry and energy orthogonality of
/// the advection terms, and the two integration-by-parts identities.
std::vector<CheckResult> run_operator_checks(int n = 16, int trials = 10, unsigned long long seed = 1);

}  // namespace mhdb
