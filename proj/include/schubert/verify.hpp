#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/rings.hpp"

namespace schubert {

/// Rings the cross-validation suite runs over.
std::vector<CoefficientRing> verification_rings();

struct VerifyOutcome {
    bool ok = true;
    int grassmannians_checked = 0;
    std::string first_failure; // empty when ok
};

/// Runs every structural invariant against every Gr_k(n) with
/// 1 <= k <= n <= max_n: square-zero differentials and the transpose
/// relation, sigma-sign agreement on every cover, partition counts, the
/// admissible-order laws, cone decomposition checks, and closed-formula
/// against Smith-normal-form oracle over all verification rings. Progress
/// goes to log when given; stops at the first counterexample.
VerifyOutcome run_verification(int max_n, std::ostream* log = nullptr);

} // namespace schubert
