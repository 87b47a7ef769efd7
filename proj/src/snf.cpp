#include "schubert/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace schubert {

DenseMatrix to_dense(const SparseMatrix& m) {
    DenseMatrix d(m.rows, m.cols);
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [row, value] : m.columns[static_cast<std::size_t>(j)])
            d.at(row, j) = value;
    return d;
}

namespace {

// Internal signal for "retry in a wider type".
struct width_exhausted {};

template <typename I>
I checked_sub(I a, I b) {
    I out;
    if (__builtin_sub_overflow(a, b, &out)) throw width_exhausted{};
    return out;
}

template <typename I>
I checked_mul(I a, I b) {
    I out;
    if (__builtin_mul_overflow(a, b, &out)) throw width_exhausted{};
    return out;
}

template <typename I>
I checked_add(I a, I b) {
    I out;
    if (__builtin_add_overflow(a, b, &out)) throw width_exhausted{};
    return out;
}

template <typename I>
I abs_of(I v) {
    if (v >= 0) return v;
    I out;
    if (__builtin_sub_overflow(I{0}, v, &out)) throw width_exhausted{}; // |min| not representable
    return out;
}

template <typename I>
class Eliminator {
public:
    Eliminator(const DenseMatrix& m)
        : rows_(m.rows), cols_(m.cols),
          a_(static_cast<std::size_t>(m.rows) * static_cast<std::size_t>(m.cols)) {
        for (std::size_t t = 0; t < a_.size(); ++t) a_[t] = static_cast<I>(m.data[t]);
    }

    std::vector<std::int64_t> run() {
        std::vector<std::int64_t> factors;
        int r = 0;
        while (r < rows_ && r < cols_) {
            if (!move_min_pivot(r)) break;
            clear_cross(r);
            if (!ensure_divides_rest(r)) continue; // pivot shrank, redo this step
            std::int64_t d = narrow(abs_of(at(r, r)));
            factors.push_back(d);
            ++r;
        }
        return factors;
    }

private:
    I& at(int i, int j) {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
    }

    static std::int64_t narrow(I v) {
        std::int64_t out = static_cast<std::int64_t>(v);
        if (static_cast<I>(out) != v) throw arithmetic_overflow_error("invariant factor exceeds int64");
        return out;
    }

    // Swap the submatrix entry of minimal nonzero magnitude into (r, r).
    bool move_min_pivot(int r) {
        int bi = -1, bj = -1;
        I best = 0;
        for (int i = r; i < rows_; ++i)
            for (int j = r; j < cols_; ++j) {
                const I v = abs_of(at(i, j));
                if (v != 0 && (bi < 0 || v < best)) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) return false;
        swap_rows(r, bi);
        swap_cols(r, bj);
        return true;
    }

    // Zero out column r below the pivot and row r right of it. A nonzero
    // remainder is strictly smaller than the pivot, so swapping it into the
    // pivot slot and repeating terminates.
    void clear_cross(int r) {
        for (bool dirty = true; dirty;) {
            dirty = false;
            for (int i = r + 1; i < rows_; ++i) {
                if (at(i, r) == 0) continue;
                const I q = at(i, r) / at(r, r);
                if (q != 0) row_axpy(i, r, q);
                if (at(i, r) != 0) {
                    swap_rows(r, i);
                    dirty = true;
                }
            }
            for (int j = r + 1; j < cols_; ++j) {
                if (at(r, j) == 0) continue;
                const I q = at(r, j) / at(r, r);
                if (q != 0) col_axpy(j, r, q);
                if (at(r, j) != 0) {
                    swap_cols(r, j);
                    dirty = true;
                }
            }
        }
    }

    // The pivot must divide the remaining submatrix for the factors to chain.
    // Folding an offending row into row r puts a non-multiple next to the
    // pivot; the next clear_cross shrinks the pivot toward the gcd.
    bool ensure_divides_rest(int r) {
        const I d = at(r, r);
        for (int i = r + 1; i < rows_; ++i)
            for (int j = r + 1; j < cols_; ++j)
                if (at(i, j) % d != 0) {
                    for (int t = r; t < cols_; ++t) at(r, t) = checked_add(at(r, t), at(i, t));
                    return false;
                }
        return true;
    }

    void row_axpy(int target, int source, I q) { // row_target -= q * row_source
        for (int t = 0; t < cols_; ++t)
            at(target, t) = checked_sub(at(target, t), checked_mul(q, at(source, t)));
    }

    void col_axpy(int target, int source, I q) {
        for (int t = 0; t < rows_; ++t)
            at(t, target) = checked_sub(at(t, target), checked_mul(q, at(t, source)));
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int t = 0; t < cols_; ++t) std::swap(at(i, t), at(j, t));
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int t = 0; t < rows_; ++t) std::swap(at(t, i), at(t, j));
    }

    int rows_;
    int cols_;
    std::vector<I> a_;
};

} // namespace

SnfResult smith_normal_form(const DenseMatrix& m) {
    SnfResult result;
    result.rows = m.rows;
    result.cols = m.cols;
    try {
        result.invariant_factors = Eliminator<std::int64_t>(m).run();
    } catch (const width_exhausted&) {
        try {
            result.invariant_factors = Eliminator<__int128>(m).run();
        } catch (const width_exhausted&) {
            throw arithmetic_overflow_error(
                "smith_normal_form: elimination exceeded 128-bit integers");
        }
    }
    return result;
}

SnfResult smith_normal_form(const SparseMatrix& m) { return smith_normal_form(to_dense(m)); }

} // namespace schubert
