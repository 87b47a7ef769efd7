#pragma once

#include <string>

#include "schubert/complex.hpp"
#include "schubert/rings.hpp"

namespace schubert {

/// One direct summand of the Schubert complex: the admissible down-set of an
/// Out-empty representative S, isomorphic to Cone(Z --2--> Z)^{x In(S)}
/// placed so its lowest cell sits in degree shift = d(S) - card(In(S)).
struct ConeSummand {
    SchubertSet representative;
    int in_size = 0;
    int shift = 0;
    std::vector<SchubertSet> member_cells; // lex order, 2^in_size of them
};

/// The unique Out-empty set above T in the admissible order: t_i + 1 on
/// Out(T), t_i elsewhere.
SchubertSet out_representative(const SchubertSet& t);

/// All T admissibly below S, for S with Out(S) empty; lex order. The map
/// T -> Out(T) is a bijection onto the subsets of In(S).
std::vector<SchubertSet> admissible_down_set(const SchubertSet& s);

/// One summand per Out-empty S; together their member cells partition
/// every cell of Gr_k(n).
std::vector<ConeSummand> cone_decomposition(int n, int k);

/// Cone(Z --2--> Z)^{x r} splits as one shifted cone with multiplicity
/// C(r-1, a) for each a in [0, r-1]. Returned as (shift a, multiplicity).
std::vector<std::pair<int, std::int64_t>> cone_power_multiplicities(int r);

/// Homology predicted by the cone model alone: every summand contributes
/// kernel/cokernel pieces of multiplication by 2 at the degrees its split
/// cones occupy. Never touches the matrices.
GradedModule cone_model_homology(int n, int k, const CoefficientRing& ring, Direction direction);

struct DecompositionReport {
    bool ok = false;
    int n = 0;
    int k = 0;
    std::size_t summand_count = 0;
    std::size_t free_summand_count = 0;       // in_size == 0
    std::int64_t covered_cells = 0;
    std::vector<std::int64_t> per_degree_generators;
    std::string failure;                       // empty when ok
};

/// Checks, against the built complex: (a) the summands partition the basis,
/// (b) no differential entry crosses two summands and each member has the
/// cube's arrow counts, (c) graded generator tallies match, (d) cone-model
/// homology equals the Smith-normal-form oracle.
DecompositionReport verify_decomposition(const GradedComplex& c);

} // namespace schubert
