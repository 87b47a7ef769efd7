#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "schubert/errors.hpp"

namespace schubert {

/// Subsets are packed into a single 64-bit word, so n may not exceed 64.
inline constexpr int max_ambient_dimension = 64;

/// A k-element subset S = {s_1 < ... < s_k} of {1, ..., n}.
///
/// This is the index of one Schubert cell of Gr_k(n). Keeps both an n-bit
/// mask (cheap hashing and equality) and the sorted element array (cheap
/// iteration); k = 0 and k = n are legal and index the one-point complex.
class SchubertSet {
public:
    SchubertSet() = default;
    SchubertSet(int n, std::vector<int> elements);
    static SchubertSet from_bits(int n, std::uint64_t bits);

    int n() const { return n_; }
    int k() const { return static_cast<int>(elements_.size()); }
    std::uint64_t bits() const { return bits_; }
    const std::vector<int>& elements() const { return elements_; }
    std::span<const int> span() const { return elements_; }

    /// 1-based coordinate access: element(i) = s_i, i in [1, k].
    int element(int i) const { return elements_[static_cast<std::size_t>(i) - 1]; }

    /// The cover candidate S_r: s_r replaced by s_r + 1. The caller must have
    /// checked that the result is still strictly increasing and within [1, n].
    SchubertSet with_incremented(int r) const;

    bool operator==(const SchubertSet& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }
    bool operator!=(const SchubertSet& other) const { return !(*this == other); }

    /// "{1,3,5}" — used in error messages and test failure output.
    std::string to_string() const;

private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
    std::vector<int> elements_;
};

/// One coordinate (i, j) of the rotation-angle cube indexing a cell,
/// i in [1,k], j in [i, s_i - 1].
struct ZIndexPair {
    int i = 0;
    int j = 0;
    bool operator==(const ZIndexPair&) const = default;
};

enum class CellKind {
    Free,          // In(S) and Out(S) both empty; contributes a full ring summand
    KernelSide,    // min(In u Out) lies in Out(S); contributes ker(R --2--> R)
    CokernelSide,  // min(In u Out) lies in In(S); contributes coker(R --2--> R)
};

/// The In/Out index sets of a cell, stored as bitmasks over coordinates
/// (bit i-1 set when coordinate i belongs to the set).
struct CellClassification {
    std::uint64_t in_mask = 0;
    std::uint64_t out_mask = 0;
    CellKind kind = CellKind::Free;

    int in_size() const;
    int out_size() const;
    std::vector<int> in_indices() const;
    std::vector<int> out_indices() const;
};

// -- enumeration ------------------------------------------------------------

/// C(n, k) for n <= 64; exact.
std::int64_t binomial(int n, int k);

/// All C(n,k) subsets in lexicographic order of the sorted element tuple.
/// This order is the canonical basis order used by every matrix in the repo.
std::vector<SchubertSet> enumerate_subsets(int n, int k);

namespace detail {
void check_enumeration_args(int n, int k);
}

/// Streaming form of enumerate_subsets: visits the same subsets in the same
/// order, passing the element tuple as a span valid only during the call.
/// This is what the closed formula uses to scan Gr_12(24) without
/// materializing 2.7M sets.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    detail::check_enumeration_args(n, k);
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
        fn(std::span<const int>(cur));
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// -- poset and dimensions ----------------------------------------------------

/// Coordinatewise comparison s_i <= t_i; the closure order on Schubert cells.
bool leq(const SchubertSet& s, const SchubertSet& t);

/// Cell dimension d(S) = sum_i (s_i - i) = card(Z_S).
int dim(std::span<const int> elements);
int dim(const SchubertSet& s);

/// Tail dimension d_r(S) = sum_{max(r,1) <= i <= k} (s_i - i); the s_0 = 0
/// sentinel makes d_0 = d_1.
int partial_dim(std::span<const int> elements, int r);
int partial_dim(const SchubertSet& s, int r);

/// Z_S in its total order: ascending in i, descending in j within fixed i.
/// Its cardinality is dim(S).
std::vector<ZIndexPair> z_index_set(const SchubertSet& s);

/// Number of m-dimensional cells of Gr_k(n): partitions of m into at most k
/// parts, each at most n-k. Returned for every degree 0 .. k(n-k).
std::vector<std::int64_t> cell_counts(int n, int k);
std::int64_t cell_count(int n, int k, int m);

// -- In/Out classification ---------------------------------------------------

/// In(S) = { i : s_i = k (mod 2), s_{i-1} < s_i - 1 } and
/// Out(S) = { i : s_i != k (mod 2), s_i + 1 < s_{i+1} },
/// with sentinels s_0 = 0 and s_{k+1} = n + 1.
CellClassification classify(std::span<const int> elements, int n);
CellClassification classify(const SchubertSet& s);

/// The relation generated by covers carrying a nonzero coefficient:
/// s_i = t_i - 1 exactly on Out(S) n In(T), s_i = t_i elsewhere.
bool admissible_leq(const SchubertSet& s, const SchubertSet& t);

} // namespace schubert
