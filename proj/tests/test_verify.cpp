#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "schubert/verify.hpp"

using namespace schubert;

TEST_CASE("the invariant suite passes at desk scale") {
    std::ostringstream log;
    const auto outcome = run_verification(5, &log);
    CHECK(outcome.ok);
    CHECK(outcome.grassmannians_checked == 15); // all 1 <= k <= n <= 5
    CHECK(outcome.first_failure.empty());
    CHECK(log.str().find("n=5: all k pass") != std::string::npos);
}

TEST_CASE("verification rings are the five cross-check rings") {
    const auto rings = verification_rings();
    REQUIRE(rings.size() == 5);
    CHECK(rings[0] == CoefficientRing::integers());
    CHECK(rings[1] == CoefficientRing::rationals());
    CHECK(rings[2] == CoefficientRing::mod(2));
    CHECK(rings[3] == CoefficientRing::mod(3));
    CHECK(rings[4] == CoefficientRing::mod(4));
}

TEST_CASE("out-of-range bounds are rejected") {
    CHECK_THROWS_AS(run_verification(0), unsupported_size_error);
    CHECK_THROWS_AS(run_verification(65), unsupported_size_error);
}
