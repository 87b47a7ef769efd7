#include "schubert/verify.hpp"

#include <bit>
#include <ostream>
#include <sstream>

#include "schubert/closed_form.hpp"
#include "schubert/complex.hpp"
#include "schubert/decomposition.hpp"
#include "schubert/homology.hpp"

namespace schubert {

std::vector<CoefficientRing> verification_rings() {
    return {CoefficientRing::integers(), CoefficientRing::rationals(), CoefficientRing::mod(2),
            CoefficientRing::mod(3), CoefficientRing::mod(4)};
}

namespace {

struct Failure {
    std::string what;
};

void check(bool condition, const std::string& what) {
    if (!condition) throw Failure{what};
}

std::string pair_tag(int n, int k) {
    return "Gr_" + std::to_string(k) + "(" + std::to_string(n) + "): ";
}

void verify_pair(int n, int k) {
    const std::string tag = pair_tag(n, k);
    const GradedComplex coh = build_complex(n, k, Direction::Cohomological);
    const GradedComplex hom = build_complex(n, k, Direction::Homological);

    // basis sizes follow the partition function
    const auto counts = cell_counts(n, k);
    check(counts.size() == coh.basis.size(), tag + "degree range mismatch");
    std::int64_t total = 0;
    for (std::size_t m = 0; m < counts.size(); ++m) {
        check(static_cast<std::int64_t>(coh.basis[m].size()) == counts[m],
              tag + "cell count in degree " + std::to_string(m) + " is " +
                  std::to_string(coh.basis[m].size()) + ", partition function says " +
                  std::to_string(counts[m]));
        total += counts[m];
    }
    check(total == binomial(n, k), tag + "partition counts do not sum to C(n,k)");

    std::int64_t kernel_cells = 0, cokernel_cells = 0;
    for (std::size_t m = 0; m < coh.basis.size(); ++m) {
        for (const auto& cell : coh.basis[m]) {
            const auto cls = classify(cell);
            check((cls.in_mask & cls.out_mask) == 0, tag + "In and Out overlap at " + cell.to_string());
            if (cls.kind == CellKind::KernelSide) ++kernel_cells;
            if (cls.kind == CellKind::CokernelSide) ++cokernel_cells;
            check(static_cast<int>(z_index_set(cell).size()) == dim(cell),
                  tag + "card(Z_S) != dim at " + cell.to_string());
            // every simplified coefficient agrees with the two link signs
            for (int r = 1; r <= k; ++r) {
                const int next = r == k ? n + 1 : cell.element(r + 1);
                if (cell.element(r) + 1 >= next) continue;
                const auto [s0, spi] = sigma_signs(cell, cell.with_incremented(r));
                check(s0 + spi == diff_coefficient(cell, r),
                      tag + "sigma sum disagrees with coefficient at " + cell.to_string() +
                          ", r=" + std::to_string(r));
            }
        }
    }
    check(kernel_cells == cokernel_cells, tag + "kernel-side and cokernel-side cell counts differ");

    check(differentials_compose_to_zero(coh), tag + "coboundary does not square to zero");
    check(differentials_compose_to_zero(hom), tag + "boundary does not square to zero");
    for (std::size_t m = 0; m < coh.diff.size(); ++m) {
        const SparseMatrix t = coh.diff[m].transposed();
        check(t.rows == hom.diff[m].rows && t.cols == hom.diff[m].cols &&
                  t.columns == hom.diff[m].columns,
              tag + "homological matrix is not the transpose in degree " + std::to_string(m));
        for (const auto& col : coh.diff[m].columns)
            for (const auto& [row, value] : col)
                check(value == 2 || value == -2,
                      tag + "coefficient " + std::to_string(value) + " is not +-2");
    }

    // admissibility: implies the closure order and steps by card(Out n In)
    for (std::size_t m = 0; m < coh.basis.size(); ++m)
        for (const auto& s : coh.basis[m])
            for (std::size_t mm = m; mm < coh.basis.size(); ++mm)
                for (const auto& t : coh.basis[mm])
                    if (admissible_leq(s, t)) {
                        check(leq(s, t), tag + "admissible pair not in the closure order");
                        const int step = std::popcount(classify(s).out_mask & classify(t).in_mask);
                        check(dim(t) - dim(s) == step,
                              tag + "admissible step size wrong from " + s.to_string() + " to " +
                                  t.to_string());
                    }

    const DecompositionReport report = verify_decomposition(coh);
    check(report.ok, tag + "decomposition: " + report.failure);
    const DecompositionReport report_hom = verify_decomposition(hom);
    check(report_hom.ok, tag + "homological decomposition: " + report_hom.failure);

    // the paper's central claim: closed formula == brute-force oracle
    const auto factors = complex_invariant_factors(coh);
    for (const auto& ring : verification_rings()) {
        const GradedModule closed = cohomology_closed(n, k, ring);
        const GradedModule oracle = homology_from_factors(coh, factors, ring);
        if (!(closed == oracle))
            for (int m = 0; m <= oracle.top_degree(); ++m)
                check(closed.at(m) == oracle.at(m),
                      tag + "closed formula != oracle over " + ring.name() + " in degree " +
                          std::to_string(m) + ": " + group_to_string(closed.at(m), ring) + " vs " +
                          group_to_string(oracle.at(m), ring));
    }

    // Euler characteristic against rational Betti numbers
    const GradedModule rational = homology_from_factors(coh, factors, CoefficientRing::rationals());
    std::int64_t chi = 0;
    for (int m = 0; m <= rational.top_degree(); ++m)
        chi += (m & 1) ? -rational.at(m).free_rank : rational.at(m).free_rank;
    check(chi == euler_characteristic(coh), tag + "Euler characteristic mismatch");

    // mod-2 dimensions equal cell counts, both routes
    const GradedModule mod2 = homology_from_factors(coh, factors, CoefficientRing::mod(2));
    const auto mod2_closed = poincare_mod2(n, k);
    for (std::size_t m = 0; m < counts.size(); ++m) {
        check(mod2.at(static_cast<int>(m)).free_rank == counts[m],
              tag + "oracle mod-2 Betti != cell count in degree " + std::to_string(m));
        check(mod2_closed[m] == counts[m],
              tag + "closed mod-2 Betti != cell count in degree " + std::to_string(m));
    }
}

} // namespace

VerifyOutcome run_verification(int max_n, std::ostream* log) {
    VerifyOutcome outcome;
    if (max_n < 1 || max_n > max_ambient_dimension)
        throw unsupported_size_error("verification bound must be in [1, 64], got " +
                                     std::to_string(max_n));
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            try {
                verify_pair(n, k);
            } catch (const Failure& failure) {
                outcome.ok = false;
                outcome.first_failure = failure.what;
                if (log) *log << "FAIL " << failure.what << '\n';
                return outcome;
            }
            ++outcome.grassmannians_checked;
        }
        if (log) *log << "n=" << n << ": all k pass\n";
    }
    return outcome;
}

} // namespace schubert
