#include "schubert/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "schubert/homology.hpp"

namespace schubert {

SchubertSet out_representative(const SchubertSet& t) {
    const std::uint64_t out_mask = classify(t).out_mask;
    if (out_mask == 0) return t;
    std::vector<int> elems = t.elements();
    for (std::uint64_t b = out_mask; b != 0; b &= b - 1)
        ++elems[static_cast<std::size_t>(std::countr_zero(b))];
    return SchubertSet(t.n(), std::move(elems));
}

std::vector<SchubertSet> admissible_down_set(const SchubertSet& s) {
    const CellClassification cls = classify(s);
    if (cls.out_mask != 0)
        throw std::invalid_argument("admissible_down_set: " + s.to_string() +
                                    " has a nonempty Out set");
    const std::vector<int> in = cls.in_indices();
    const std::size_t count = std::size_t{1} << in.size();
    std::vector<SchubertSet> members;
    members.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<int> elems = s.elements();
        for (std::size_t b = 0; b < in.size(); ++b)
            if (mask >> b & 1) --elems[static_cast<std::size_t>(in[b]) - 1];
        members.emplace_back(s.n(), std::move(elems));
    }
    std::sort(members.begin(), members.end(),
              [](const SchubertSet& a, const SchubertSet& b) { return a.elements() < b.elements(); });
    return members;
}

std::vector<ConeSummand> cone_decomposition(int n, int k) {
    detail::check_enumeration_args(n, k);
    std::vector<ConeSummand> out;
    for_each_subset(n, k, [&](std::span<const int> elems) {
        const CellClassification cls = classify(elems, n);
        if (cls.out_mask != 0) return;
        SchubertSet rep(n, std::vector<int>(elems.begin(), elems.end()));
        const int in_size = cls.in_size();
        const int shift = dim(rep) - in_size;
        auto members = admissible_down_set(rep);
        out.push_back({std::move(rep), in_size, shift, std::move(members)});
    });
    return out;
}

std::vector<std::pair<int, std::int64_t>> cone_power_multiplicities(int r) {
    if (r < 1) throw std::invalid_argument("cone_power_multiplicities: r must be positive");
    std::vector<std::pair<int, std::int64_t>> out;
    out.reserve(static_cast<std::size_t>(r));
    for (int a = 0; a < r; ++a) out.emplace_back(a, binomial(r - 1, a));
    return out;
}

GradedModule cone_model_homology(int n, int k, const CoefficientRing& ring, Direction direction) {
    detail::check_enumeration_args(n, k);
    GradedModule hm;
    hm.ring = ring;
    hm.groups.resize(static_cast<std::size_t>(k * (n - k)) + 1);
    const std::int64_t ker_order = ring.kernel_of_two_order();
    const std::int64_t coker_order = ring.cokernel_of_two_order();
    for_each_subset(n, k, [&](std::span<const int> elems) {
        const CellClassification cls = classify(elems, n);
        if (cls.out_mask != 0) return;
        const int d = dim(elems);
        const int r = cls.in_size();
        if (r == 0) {
            hm.add_free(d);
            return;
        }
        const int shift = d - r;
        for (const auto& [a, mult] : cone_power_multiplicities(r)) {
            // one cone spanning degrees shift+a, shift+a+1; the coboundary
            // runs up, the boundary runs down
            const int ker_degree = direction == Direction::Cohomological ? shift + a : shift + a + 1;
            const int coker_degree = direction == Direction::Cohomological ? shift + a + 1 : shift + a;
            hm.add_cyclic(ker_degree, ker_order, mult);
            hm.add_cyclic(coker_degree, coker_order, mult);
        }
    });
    hm.normalize();
    return hm;
}

DecompositionReport verify_decomposition(const GradedComplex& c) {
    DecompositionReport report;
    report.n = c.n;
    report.k = c.k;
    auto fail = [&](std::string why) {
        report.ok = false;
        report.failure = std::move(why);
        return report;
    };

    const auto summands = cone_decomposition(c.n, c.k);
    report.summand_count = summands.size();

    // (a) member cells partition the basis
    std::unordered_map<std::uint64_t, std::size_t> owner;
    for (std::size_t s = 0; s < summands.size(); ++s) {
        const auto& summand = summands[s];
        if (summand.member_cells.size() != std::size_t{1} << summand.in_size)
            return fail("summand of " + summand.representative.to_string() +
                        " has wrong cell count");
        if (summand.in_size == 0) ++report.free_summand_count;
        for (const auto& cell : summand.member_cells) {
            if (!owner.emplace(cell.bits(), s).second)
                return fail("cell " + cell.to_string() + " lies in two summands");
            if (out_representative(cell) != summand.representative)
                return fail("cell " + cell.to_string() + " does not map to its representative " +
                            summand.representative.to_string());
            if (!admissible_leq(cell, summand.representative))
                return fail("cell " + cell.to_string() + " is not admissibly below " +
                            summand.representative.to_string());
        }
        report.covered_cells += static_cast<std::int64_t>(summand.member_cells.size());
    }
    if (report.covered_cells != binomial(c.n, c.k))
        return fail("summands cover " + std::to_string(report.covered_cells) + " cells, expected " +
                    std::to_string(binomial(c.n, c.k)));

    // (b) no differential entry crosses summands, and inside each summand
    // every member has exactly card(Out(T)) outgoing and in_size - card(Out(T))
    // incoming arrows: the arrow pattern of a cube
    std::unordered_map<std::uint64_t, int> incoming;
    for (const auto& summand : summands)
        for (const auto& cell : summand.member_cells) {
            const auto terms = boundary(cell);
            const int outs = classify(cell).out_size();
            if (static_cast<int>(terms.size()) != outs)
                return fail("cell " + cell.to_string() + " has " + std::to_string(terms.size()) +
                            " nonzero covers, expected card(Out) = " + std::to_string(outs));
            for (const auto& term : terms) {
                auto it = owner.find(term.target.bits());
                if (it == owner.end() || summands[it->second].representative != summand.representative)
                    return fail("entry " + cell.to_string() + " -> " + term.target.to_string() +
                                " crosses summands");
                ++incoming[term.target.bits()];
            }
        }
    for (const auto& summand : summands)
        for (const auto& cell : summand.member_cells) {
            const int want = summand.in_size - classify(cell).out_size();
            const auto it = incoming.find(cell.bits());
            const int got = it == incoming.end() ? 0 : it->second;
            if (got != want)
                return fail("cell " + cell.to_string() + " receives " + std::to_string(got) +
                            " arrows, expected " + std::to_string(want));
        }

    // (c) graded generator tallies match the built bases
    report.per_degree_generators.assign(c.basis.size(), 0);
    for (const auto& summand : summands)
        for (int a = 0; a <= summand.in_size; ++a)
            report.per_degree_generators[static_cast<std::size_t>(summand.shift + a)] +=
                binomial(summand.in_size, a);
    for (std::size_t m = 0; m < c.basis.size(); ++m)
        if (report.per_degree_generators[m] != static_cast<std::int64_t>(c.basis[m].size()))
            return fail("degree " + std::to_string(m) + " tally " +
                        std::to_string(report.per_degree_generators[m]) + " != basis size " +
                        std::to_string(c.basis[m].size()));

    // (d) the cone model reproduces the oracle homology
    const GradedModule model = cone_model_homology(c.n, c.k, CoefficientRing::integers(), c.direction);
    const GradedModule oracle = homology_integral(c);
    if (!(model == oracle)) {
        for (int m = 0; m <= oracle.top_degree(); ++m)
            if (!(model.at(m) == oracle.at(m)))
                return fail("cone model disagrees with the oracle in degree " + std::to_string(m) +
                            ": " + group_to_string(model.at(m), model.ring) + " vs " +
                            group_to_string(oracle.at(m), oracle.ring));
        return fail("cone model disagrees with the oracle");
    }

    report.ok = true;
    return report;
}

} // namespace schubert
