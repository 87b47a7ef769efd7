#pragma once

#include <cstdint>
#include <vector>

#include "schubert/complex.hpp"

namespace schubert {

/// Dense row-major integer matrix; the oracle's working representation.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> data;

    DenseMatrix() = default;
    DenseMatrix(int rows_, int cols_)
        : rows(rows_), cols(cols_),
          data(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), 0) {}

    std::int64_t& at(int i, int j) {
        return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                    static_cast<std::size_t>(j)];
    }
    std::int64_t at(int i, int j) const {
        return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                    static_cast<std::size_t>(j)];
    }
};

DenseMatrix to_dense(const SparseMatrix& m);

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.
struct SnfResult {
    std::vector<std::int64_t> invariant_factors; // positive, divisibility chain
    int rows = 0;
    int cols = 0;

    int rank() const { return static_cast<int>(invariant_factors.size()); }
};

/// Smith normal form by exact integer elimination with minimum-|entry|
/// pivoting. All arithmetic is overflow-checked; on int64 overflow the whole
/// computation restarts in 128-bit, and exceeding that raises
/// arithmetic_overflow_error rather than ever wrapping.
SnfResult smith_normal_form(const DenseMatrix& m);
SnfResult smith_normal_form(const SparseMatrix& m);

} // namespace schubert
