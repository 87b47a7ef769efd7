#pragma once

#include "schubert/rings.hpp"
#include "schubert/subsets.hpp"

namespace schubert {

/// The summand a single cell contributes to H*(Gr_k(n); R): either the whole
/// ring, or a finite cyclic group (order 1 meaning it contributes nothing).
struct ModuleDescriptor {
    bool whole_ring = false;
    std::int64_t order = 1; // meaningful when !whole_ring

    bool operator==(const ModuleDescriptor&) const = default;
};

/// V_S: Free -> R, KernelSide -> ker(R --2--> R), CokernelSide -> coker.
ModuleDescriptor v_module(const SchubertSet& s, const CoefficientRing& ring);

/// The closed formula: one streaming pass over all C(n,k) cells, each placed
/// in degree d(S) with summand V_S. No matrices are built, so this is the
/// path that scales to Gr_12(24).
GradedModule cohomology_closed(int n, int k, const CoefficientRing& ring);

/// Per-degree dimensions over Z/2; equal to the cell counts, since every
/// differential vanishes when 2 = 0.
std::vector<std::int64_t> poincare_mod2(int n, int k);

/// Per-degree census of the classification, shared by the closed formula and
/// its tests: counts[kind][degree].
struct ClassificationCensus {
    std::vector<std::int64_t> free_cells;
    std::vector<std::int64_t> kernel_side;
    std::vector<std::int64_t> cokernel_side;
};
ClassificationCensus classification_census(int n, int k);

} // namespace schubert
