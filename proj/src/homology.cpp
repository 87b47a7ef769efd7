#include "schubert/homology.hpp"

#include <numeric>

namespace schubert {

std::vector<SnfResult> complex_invariant_factors(const GradedComplex& c) {
    for (const auto& cells : c.basis)
        if (static_cast<int>(cells.size()) > oracle_max_degree_size)
            throw resource_error("oracle limit: a degree holds " + std::to_string(cells.size()) +
                                 " cells, above the " + std::to_string(oracle_max_degree_size) +
                                 " bound; use the closed formula at this scale");
    if (!differentials_compose_to_zero(c))
        throw invalid_complex_error("differentials do not compose to zero");
    std::vector<SnfResult> out;
    out.reserve(c.diff.size());
    for (const auto& d : c.diff) out.push_back(smith_normal_form(d));
    return out;
}

GradedModule homology_from_factors(const GradedComplex& c, const std::vector<SnfResult>& factors,
                                   const CoefficientRing& ring) {
    GradedModule hm;
    hm.ring = ring;
    hm.groups.resize(c.basis.size());
    const int top = c.top_degree();
    for (int m = 0; m <= top; ++m) {
        const std::int64_t cells = static_cast<std::int64_t>(c.basis[static_cast<std::size_t>(m)].size());
        const SnfResult* below = m > 0 ? &factors[static_cast<std::size_t>(m) - 1] : nullptr;
        const SnfResult* above = m < top ? &factors[static_cast<std::size_t>(m)] : nullptr;
        const std::int64_t rank_below = below ? below->rank() : 0;
        const std::int64_t rank_above = above ? above->rank() : 0;
        hm.add_free(m, cells - rank_below - rank_above);

        // The differential pointing INTO degree m supplies the cokernel
        // pieces; for Z that is all the torsion there is.
        const SnfResult* incoming = c.direction == Direction::Cohomological ? below : above;
        const SnfResult* outgoing = c.direction == Direction::Cohomological ? above : below;
        switch (ring.tag) {
        case CoefficientRing::Tag::Integers:
            if (incoming)
                for (std::int64_t d : incoming->invariant_factors) hm.add_cyclic(m, d);
            break;
        case CoefficientRing::Tag::Rationals:
            break;
        case CoefficientRing::Tag::Mod:
            if (incoming)
                for (std::int64_t d : incoming->invariant_factors)
                    hm.add_cyclic(m, std::gcd(d, ring.modulus));
            if (outgoing)
                for (std::int64_t d : outgoing->invariant_factors)
                    hm.add_cyclic(m, std::gcd(d, ring.modulus));
            break;
        }
    }
    hm.normalize();
    return hm;
}

GradedModule homology_integral(const GradedComplex& c) {
    return homology_from_factors(c, complex_invariant_factors(c), CoefficientRing::integers());
}

GradedModule homology_with_coefficients(const GradedComplex& c, const CoefficientRing& ring) {
    return homology_from_factors(c, complex_invariant_factors(c), ring);
}

} // namespace schubert
