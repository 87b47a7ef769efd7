#include "schubert/closed_form.hpp"

namespace schubert {

ModuleDescriptor v_module(const SchubertSet& s, const CoefficientRing& ring) {
    switch (classify(s).kind) {
    case CellKind::Free: return {true, 0};
    case CellKind::KernelSide: return {false, ring.kernel_of_two_order()};
    case CellKind::CokernelSide: return {false, ring.cokernel_of_two_order()};
    }
    return {false, 1};
}

ClassificationCensus classification_census(int n, int k) {
    detail::check_enumeration_args(n, k);
    const std::size_t degrees = static_cast<std::size_t>(k * (n - k)) + 1;
    ClassificationCensus census{std::vector<std::int64_t>(degrees, 0),
                                std::vector<std::int64_t>(degrees, 0),
                                std::vector<std::int64_t>(degrees, 0)};
    for_each_subset(n, k, [&](std::span<const int> elems) {
        const auto d = static_cast<std::size_t>(dim(elems));
        switch (classify(elems, n).kind) {
        case CellKind::Free: ++census.free_cells[d]; break;
        case CellKind::KernelSide: ++census.kernel_side[d]; break;
        case CellKind::CokernelSide: ++census.cokernel_side[d]; break;
        }
    });
    return census;
}

GradedModule cohomology_closed(int n, int k, const CoefficientRing& ring) {
    const ClassificationCensus census = classification_census(n, k);
    GradedModule hm;
    hm.ring = ring;
    hm.groups.resize(census.free_cells.size());
    const std::int64_t ker_order = ring.kernel_of_two_order();
    const std::int64_t coker_order = ring.cokernel_of_two_order();
    for (int m = 0; m < static_cast<int>(census.free_cells.size()); ++m) {
        hm.add_free(m, census.free_cells[static_cast<std::size_t>(m)]);
        hm.add_cyclic(m, ker_order, census.kernel_side[static_cast<std::size_t>(m)]);
        hm.add_cyclic(m, coker_order, census.cokernel_side[static_cast<std::size_t>(m)]);
    }
    hm.normalize();
    return hm;
}

std::vector<std::int64_t> poincare_mod2(int n, int k) {
    const GradedModule hm = cohomology_closed(n, k, CoefficientRing::mod(2));
    std::vector<std::int64_t> dims;
    dims.reserve(hm.groups.size());
    for (const auto& g : hm.groups) dims.push_back(g.free_rank);
    return dims;
}

} // namespace schubert
