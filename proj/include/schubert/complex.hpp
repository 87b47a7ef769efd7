#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "schubert/subsets.hpp"

namespace schubert {

enum class Direction {
    Homological,    // boundary lowers degree
    Cohomological,  // coboundary raises degree (transpose of the boundary)
};

/// Column-major sparse integer matrix. Every nonzero of a Schubert
/// differential is +2 or -2 and a column holds at most k entries.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> columns; // (row, value), rows ascending

    SparseMatrix() = default;
    SparseMatrix(int rows_, int cols_)
        : rows(rows_), cols(cols_), columns(static_cast<std::size_t>(cols_)) {}

    void add_entry(int row, int col, int value) {
        columns[static_cast<std::size_t>(col)].emplace_back(row, value);
    }
    std::size_t entry_count() const;
    SparseMatrix transposed() const;
    bool is_zero() const;
};

/// first (applied first), then second: returns second * first.
SparseMatrix multiply(const SparseMatrix& second, const SparseMatrix& first);

/// One term of the differential of a cell: target = S_r and the signed value.
struct CoverCoefficient {
    SchubertSet source;
    int r = 0;
    SchubertSet target;
    int value = 0;
};

/// The Schubert chain (or cochain) complex of Gr_k(n): the lex-ordered cell
/// basis in every degree and one sparse matrix between each pair of adjacent
/// degrees.
///
/// between(m) connects degrees m and m+1:
///   Homological    rows = cells(m),   cols = cells(m+1)   (boundary of degree m+1)
///   Cohomological  rows = cells(m+1), cols = cells(m)     (coboundary of degree m)
/// The two orientations are entrywise transposes of one another.
struct GradedComplex {
    int n = 0;
    int k = 0;
    Direction direction = Direction::Cohomological;
    std::vector<std::vector<SchubertSet>> basis; // index = degree
    std::vector<SparseMatrix> diff;              // diff[m] sits between degrees m, m+1

    int top_degree() const { return static_cast<int>(basis.size()) - 1; }
    const SparseMatrix& between(int m) const { return diff[static_cast<std::size_t>(m)]; }

    /// Signed coefficient attached to the pair (S in degree m, T = S_r in
    /// degree m+1), regardless of orientation; 0 when absent.
    int coefficient(const SchubertSet& source, const SchubertSet& target) const;
};

/// The two link-point signs (sigma([Theta^0]), sigma([Theta^pi])) of the cover
/// S < T = S_r. Their sum is the differential coefficient.
std::pair<int, int> sigma_signs(const SchubertSet& s, const SchubertSet& t);

/// Coefficient of S_r in the differential of S:
///   (-1)^{d_r(S)} * 2  when s_{r+1} - s_r > 1 (sentinel s_{k+1} = n+1) and
///                       k - s_r is odd;
///   0 otherwise (including when S_r is not a valid subset).
int diff_coefficient(const SchubertSet& s, int r);

/// All nonzero terms of the differential of S, ascending in r. At most k.
std::vector<CoverCoefficient> boundary(const SchubertSet& s);

GradedComplex build_complex(int n, int k, Direction direction);

/// Alternating sum of basis sizes.
std::int64_t euler_characteristic(const GradedComplex& c);

/// True when every composite of adjacent differentials vanishes.
bool differentials_compose_to_zero(const GradedComplex& c);

} // namespace schubert
