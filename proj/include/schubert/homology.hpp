#pragma once

#include "schubert/complex.hpp"
#include "schubert/rings.hpp"
#include "schubert/snf.hpp"

namespace schubert {

/// The brute-force verifier refuses complexes with a degree this large;
/// elimination is cubic and the closed formula covers every large case.
inline constexpr int oracle_max_degree_size = 20000;

/// Integral (co)homology of the complex by Smith normal form: in each degree,
/// free rank = basis size minus the ranks of the two adjacent differentials,
/// torsion = invariant factors > 1 of the incoming differential.
GradedModule homology_integral(const GradedComplex& c);

/// Homology with coefficients, derived from the integral invariant factors:
/// over Q only ranks survive; over Z/m each invariant factor d contributes a
/// kernel piece and a cokernel piece, both cyclic of order gcd(d, m).
GradedModule homology_with_coefficients(const GradedComplex& c, const CoefficientRing& ring);

/// The per-differential SNF data the two functions above share. Exposed so a
/// caller comparing several rings pays for elimination once.
std::vector<SnfResult> complex_invariant_factors(const GradedComplex& c);

/// Assembles the graded module for one ring from precomputed SNF data.
GradedModule homology_from_factors(const GradedComplex& c, const std::vector<SnfResult>& factors,
                                   const CoefficientRing& ring);

} // namespace schubert
