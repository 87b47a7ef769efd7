#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "schubert/decomposition.hpp"
#include "schubert/homology.hpp"

using namespace schubert;

namespace {
SchubertSet make(int n, std::vector<int> elems) { return SchubertSet(n, std::move(elems)); }

std::vector<std::vector<int>> element_lists(const std::vector<SchubertSet>& cells) {
    std::vector<std::vector<int>> out;
    for (const auto& c : cells) out.push_back(c.elements());
    return out;
}
} // namespace

TEST_CASE("out_representative") {
    const auto fixed = make(6, {1, 3, 5}); // Out already empty
    CHECK(out_representative(fixed) == fixed);
    CHECK(out_representative(make(3, {2})) == make(3, {3}));
    CHECK(out_representative(make(6, {1, 2, 4})) == make(6, {1, 3, 5}));

    // result always has empty Out and sits admissibly above, exhaustively
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; k <= n; ++k)
            for_each_subset(n, k, [&](std::span<const int> elems) {
                SchubertSet t(n, std::vector<int>(elems.begin(), elems.end()));
                const auto rep = out_representative(t);
                CHECK(classify(rep).out_mask == 0);
                CHECK(admissible_leq(t, rep));
            });
}

TEST_CASE("admissible_down_set") {
    CHECK(element_lists(admissible_down_set(make(3, {3}))) ==
          std::vector<std::vector<int>>{{2}, {3}});
    CHECK(element_lists(admissible_down_set(make(6, {1, 3, 5}))) ==
          std::vector<std::vector<int>>{{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});

    const auto lone = make(4, {1, 2}); // In and Out both empty
    CHECK(element_lists(admissible_down_set(lone)) == std::vector<std::vector<int>>{{1, 2}});

    CHECK_THROWS_AS(admissible_down_set(make(3, {2})), std::invalid_argument); // Out = {1}
}

TEST_CASE("down-sets partition the cells") {
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            std::map<std::uint64_t, int> seen;
            std::int64_t covered = 0;
            for (const auto& summand : cone_decomposition(n, k)) {
                CHECK(summand.member_cells.size() == std::size_t{1} << summand.in_size);
                CHECK(summand.shift == dim(summand.representative) - summand.in_size);
                for (const auto& cell : summand.member_cells) ++seen[cell.bits()];
                covered += static_cast<std::int64_t>(summand.member_cells.size());
            }
            CHECK(covered == binomial(n, k)); // sum over reps of 2^card(In)
            for (const auto& [bits, count] : seen) CHECK(count == 1);
        }
}

TEST_CASE("cone_decomposition small cases") {
    const auto circle = cone_decomposition(2, 1);
    REQUIRE(circle.size() == 2);
    CHECK(circle[0].in_size == 0);
    CHECK(circle[1].in_size == 0);

    const auto rp2 = cone_decomposition(3, 1);
    REQUIRE(rp2.size() == 2);  // one free summand {1}, one cone at {3}
    CHECK(rp2[0].representative == make(3, {1}));
    CHECK(rp2[0].in_size == 0);
    CHECK(rp2[1].representative == make(3, {3}));
    CHECK(rp2[1].in_size == 1);
    CHECK(rp2[1].shift == 1);

    std::int64_t cells = 0;
    for (const auto& s : cone_decomposition(6, 3)) cells += std::int64_t{1} << s.in_size;
    CHECK(cells == 20);
}

TEST_CASE("cone_power_multiplicities") {
    using Row = std::vector<std::pair<int, std::int64_t>>;
    CHECK(cone_power_multiplicities(1) == Row{{0, 1}});
    CHECK(cone_power_multiplicities(2) == Row{{0, 1}, {1, 1}});
    CHECK(cone_power_multiplicities(4) == Row{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
    CHECK_THROWS_AS(cone_power_multiplicities(0), std::invalid_argument);

    for (int r = 1; r <= 12; ++r) {
        std::int64_t generators = 0;
        for (const auto& [shift, mult] : cone_power_multiplicities(r)) generators += 2 * mult;
        CHECK(generators == std::int64_t{1} << r); // each cone contributes two generators
    }
}

TEST_CASE("verify_decomposition") {
    const auto circle = verify_decomposition(build_complex(2, 1, Direction::Homological));
    CHECK(circle.ok);
    CHECK(circle.summand_count == 2);
    CHECK(circle.free_summand_count == 2);

    const auto gr36 = verify_decomposition(build_complex(6, 3, Direction::Cohomological));
    CHECK(gr36.ok);
    CHECK(gr36.per_degree_generators ==
          std::vector<std::int64_t>{1, 1, 2, 3, 3, 3, 3, 2, 1, 1});

    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto report = verify_decomposition(build_complex(n, k, Direction::Cohomological));
            REQUIRE_MESSAGE(report.ok, "Gr_", k, "(", n, "): ", report.failure);
        }
}

TEST_CASE("cone model homology equals the oracle in every ring") {
    const std::vector<CoefficientRing> rings = {
        CoefficientRing::integers(), CoefficientRing::rationals(), CoefficientRing::mod(2),
        CoefficientRing::mod(3), CoefficientRing::mod(4)};
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for (auto direction : {Direction::Cohomological, Direction::Homological}) {
                const auto c = build_complex(n, k, direction);
                const auto factors = complex_invariant_factors(c);
                for (const auto& ring : rings) {
                    const auto model = cone_model_homology(n, k, ring, direction);
                    const auto oracle = homology_from_factors(c, factors, ring);
                    REQUIRE_MESSAGE(model == oracle, "Gr_", k, "(", n, ") over ", ring.name());
                }
            }
}
