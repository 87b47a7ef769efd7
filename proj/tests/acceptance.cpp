// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each check carries its runtime budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <utility>
#include <vector>

#include "schubert/closed_form.hpp"
#include "schubert/complex.hpp"
#include "schubert/decomposition.hpp"
#include "schubert/homology.hpp"

using namespace schubert;

namespace {

// degree-indexed (free rank, number of Z/2 summands), degrees 0..144
constexpr std::pair<int, int> gr_12_24_table[145] = {
    {1, 0}, {0, 0}, {0, 1}, {0, 1}, {1, 2}, {0, 2}, {0, 5}, {0, 6},
    {2, 9}, {0, 11}, {0, 19}, {0, 23}, {3, 33}, {0, 41}, {0, 58}, {0, 73},
    {5, 95}, {0, 117}, {0, 156}, {0, 191}, {7, 239}, {0, 291}, {0, 367}, {0, 441},
    {11, 536}, {0, 638}, {0, 777}, {0, 916}, {13, 1087}, {0, 1268}, {0, 1503}, {0, 1740},
    {18, 2017}, {0, 2316}, {0, 2680}, {0, 3048}, {22, 3470}, {0, 3917}, {0, 4440}, {0, 4974},
    {28, 5562}, {0, 6179}, {0, 6886}, {0, 7594}, {32, 8356}, {0, 9151}, {0, 10029}, {0, 10901},
    {39, 11821}, {0, 12760}, {0, 13776}, {0, 14770}, {42, 15791}, {0, 16814}, {0, 17898}, {0, 18936},
    {48, 19967}, {0, 20990}, {0, 22040}, {0, 23015}, {51, 23959}, {0, 24864}, {0, 25764}, {0, 26573},
    {55, 27307}, {0, 27984}, {0, 28635}, {0, 29166}, {55, 29596}, {0, 29963}, {0, 30272}, {0, 30456},
    {58, 30525}, {0, 30525}, {0, 30456}, {0, 30272}, {55, 29963}, {0, 29596}, {0, 29166}, {0, 28635},
    {55, 27984}, {0, 27307}, {0, 26573}, {0, 25764}, {51, 24864}, {0, 23959}, {0, 23015}, {0, 22040},
    {48, 20990}, {0, 19967}, {0, 18936}, {0, 17898}, {42, 16814}, {0, 15791}, {0, 14770}, {0, 13776},
    {39, 12760}, {0, 11821}, {0, 10901}, {0, 10029}, {32, 9151}, {0, 8356}, {0, 7594}, {0, 6886},
    {28, 6179}, {0, 5562}, {0, 4974}, {0, 4440}, {22, 3917}, {0, 3470}, {0, 3048}, {0, 2680},
    {18, 2316}, {0, 2017}, {0, 1740}, {0, 1503}, {13, 1268}, {0, 1087}, {0, 916}, {0, 777},
    {11, 638}, {0, 536}, {0, 441}, {0, 367}, {7, 291}, {0, 239}, {0, 191}, {0, 156},
    {5, 117}, {0, 95}, {0, 73}, {0, 58}, {3, 41}, {0, 33}, {0, 23}, {0, 19},
    {2, 11}, {0, 9}, {0, 6}, {0, 5}, {1, 2}, {0, 2}, {0, 1}, {0, 1},
    {1, 0}
};

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<std::string()> run; // empty string = pass, else failure note
};

SchubertSet cell(std::vector<int> elems) { return SchubertSet(6, std::move(elems)); }

std::string check_figure_reproduction() {
    const auto c = build_complex(6, 3, Direction::Cohomological);
    const std::vector<std::tuple<std::vector<int>, std::vector<int>, int>> spots = {
        {{1, 2, 4}, {1, 3, 4}, -2}, {{1, 2, 4}, {1, 2, 5}, -2}, {{1, 2, 5}, {1, 3, 5}, 2},
        {{1, 2, 6}, {1, 3, 6}, -2}, {{1, 3, 4}, {1, 3, 5}, -2}, {{2, 3, 4}, {2, 3, 5}, -2},
        {{2, 4, 5}, {3, 4, 5}, -2}, {{1, 4, 6}, {1, 5, 6}, -2}, {{2, 4, 6}, {3, 4, 6}, 2},
        {{2, 4, 6}, {2, 5, 6}, -2}, {{1, 2, 3}, {1, 2, 4}, 0},  {{1, 3, 5}, {1, 4, 5}, 0},
        {{1, 3, 5}, {2, 3, 5}, 0},  {{1, 3, 5}, {1, 3, 6}, 0},  {{2, 3, 5}, {2, 4, 5}, 0},
        {{2, 3, 6}, {2, 4, 6}, 0}};
    for (const auto& [source, target, want] : spots) {
        const int got = c.coefficient(cell(source), cell(target));
        if (got != want) {
            std::ostringstream why;
            why << cell(source).to_string() << " -> " << cell(target).to_string() << " is " << got
                << ", figure says " << want;
            return why.str();
        }
    }
    return {};
}

std::string check_table_reproduction() {
    const auto hm = cohomology_closed(24, 12, CoefficientRing::integers());
    if (hm.top_degree() != 144) return "expected 145 rows";
    for (int m = 0; m <= 144; ++m) {
        const auto& g = hm.at(m);
        for (std::int64_t d : g.torsion)
            if (d != 2) return "degree " + std::to_string(m) + " has torsion order " + std::to_string(d);
        const auto [want_free, want_torsion] = gr_12_24_table[m];
        if (g.free_rank != want_free ||
            static_cast<std::int64_t>(g.torsion.size()) != want_torsion)
            return "degree " + std::to_string(m) + ": got (" + std::to_string(g.free_rank) + "," +
                   std::to_string(g.torsion.size()) + "), table says (" +
                   std::to_string(want_free) + "," + std::to_string(want_torsion) + ")";
    }
    return {};
}

std::string check_oracle_equivalence() {
    const std::vector<CoefficientRing> rings = {
        CoefficientRing::integers(), CoefficientRing::rationals(), CoefficientRing::mod(2),
        CoefficientRing::mod(3), CoefficientRing::mod(4)};
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto c = build_complex(n, k, Direction::Cohomological);
            const auto factors = complex_invariant_factors(c);
            for (const auto& ring : rings) {
                const auto closed = cohomology_closed(n, k, ring);
                const auto oracle = homology_from_factors(c, factors, ring);
                if (!(closed == oracle))
                    return "Gr_" + std::to_string(k) + "(" + std::to_string(n) + ") over " +
                           ring.name();
            }
        }
    return {};
}

std::string check_complex_validity() {
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto c = build_complex(n, k, Direction::Cohomological);
            if (!differentials_compose_to_zero(c))
                return "delta^2 != 0 for Gr_" + std::to_string(k) + "(" + std::to_string(n) + ")";
            for (const auto& cells : c.basis)
                for (const auto& s : cells)
                    for (int r = 1; r <= k; ++r) {
                        const int next = r == k ? n + 1 : s.element(r + 1);
                        if (s.element(r) + 1 >= next) continue;
                        const auto [s0, spi] = sigma_signs(s, s.with_incremented(r));
                        if (s0 + spi != diff_coefficient(s, r))
                            return "sigma sum mismatch at " + s.to_string() +
                                   ", r=" + std::to_string(r);
                    }
        }
    return {};
}

std::string check_cell_count_law() {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto counts = cell_counts(n, k);
            const auto c = build_complex(n, k, Direction::Cohomological);
            const auto closed_mod2 = poincare_mod2(n, k);
            const auto oracle_mod2 = homology_with_coefficients(c, CoefficientRing::mod(2));
            for (std::size_t m = 0; m < counts.size(); ++m) {
                if (static_cast<std::int64_t>(c.basis[m].size()) != counts[m])
                    return "basis size != partition count at Gr_" + std::to_string(k) + "(" +
                           std::to_string(n) + ") degree " + std::to_string(m);
                if (closed_mod2[m] != counts[m] ||
                    oracle_mod2.at(static_cast<int>(m)).free_rank != counts[m])
                    return "mod-2 Betti != partition count at Gr_" + std::to_string(k) + "(" +
                           std::to_string(n) + ") degree " + std::to_string(m);
            }
        }
    return {};
}

std::string check_decomposition() {
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            std::int64_t covered = 0;
            for (const auto& summand : cone_decomposition(n, k))
                covered += std::int64_t{1} << summand.in_size;
            if (covered != binomial(n, k))
                return "summand sizes do not sum to C(n,k) at Gr_" + std::to_string(k) + "(" +
                       std::to_string(n) + ")";
            const auto report = verify_decomposition(build_complex(n, k, Direction::Cohomological));
            if (!report.ok)
                return "Gr_" + std::to_string(k) + "(" + std::to_string(n) + "): " + report.failure;
        }
    return {};
}

std::string check_projective_spaces() {
    const std::vector<std::pair<int, std::vector<GradedGroup>>> expected = {
        {2, {{1, {}}, {1, {}}}},
        {3, {{1, {}}, {0, {}}, {0, {2}}}},
        {4, {{1, {}}, {0, {}}, {0, {2}}, {1, {}}}},
    };
    for (const auto& [n, groups] : expected) {
        const auto hm = homology_integral(build_complex(n, 1, Direction::Cohomological));
        if (!(hm.groups == groups)) return "Gr_1(" + std::to_string(n) + ") disagrees";
    }
    return {};
}

std::string check_table_symmetry() {
    // The symmetry Table "gr1224" exhibits: free ranks mirror across degree 72,
    // torsion counts mirror across 72.5 (m <-> 145 - m).
    const auto hm = cohomology_closed(24, 12, CoefficientRing::integers());
    for (int m = 0; m <= 144; ++m)
        if (hm.at(m).free_rank != hm.at(144 - m).free_rank)
            return "free rank asymmetric at degree " + std::to_string(m);
    for (int m = 1; m <= 144; ++m)
        if (hm.at(m).torsion.size() != hm.at(145 - m).torsion.size())
            return "torsion count asymmetric at degree " + std::to_string(m);
    if (!hm.at(0).torsion.empty()) return "degree 0 has torsion";
    return {};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "figure reproduction: Gr_3(6) signed coefficients", 1.0, check_figure_reproduction},
        {2, "table reproduction: closed formula matches all 145 Gr_12(24) rows", 60.0,
         check_table_reproduction},
        {3, "closed formula == oracle, n <= 9, R in {Z, Q, Z/2, Z/3, Z/4}", 300.0,
         check_oracle_equivalence},
        {4, "delta^2 = 0 and sigma-sign sums, n <= 10", 30.0, check_complex_validity},
        {5, "cell-count law and mod-2 Betti numbers, n <= 12", 60.0, check_cell_count_law},
        {6, "cone decomposition checks, n <= 10", 300.0, check_decomposition},
        {7, "projective-space sanity: Gr_1(2), Gr_1(3), Gr_1(4)", 10.0, check_projective_spaces},
        {8, "Gr_12(24) table symmetry", 60.0, check_table_symmetry},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string why;
        try {
            why = criterion.run();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (why.empty() && elapsed > criterion.budget_seconds)
            why = "exceeded " + std::to_string(criterion.budget_seconds) + "s budget";
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (why.empty() ? "PASS" : "FAIL") << "  criterion " << criterion.number << ": "
             << criterion.title << "  [" << elapsed << "s]";
        if (!why.empty()) line << "  -- " << why;
        std::cout << line.str() << '\n';
        if (!why.empty()) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
