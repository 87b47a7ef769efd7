#include "schubert/complex.hpp"

#include <algorithm>
#include <unordered_map>

namespace schubert {

std::size_t SparseMatrix::entry_count() const {
    std::size_t total = 0;
    for (const auto& col : columns) total += col.size();
    return total;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t(cols, rows);
    for (int j = 0; j < cols; ++j)
        for (const auto& [row, value] : columns[static_cast<std::size_t>(j)])
            t.add_entry(j, row, value);
    for (auto& col : t.columns)
        std::sort(col.begin(), col.end());
    return t;
}

bool SparseMatrix::is_zero() const {
    for (const auto& col : columns)
        for (const auto& [row, value] : col)
            if (value != 0) return false;
    return true;
}

SparseMatrix multiply(const SparseMatrix& second, const SparseMatrix& first) {
    if (second.cols != first.rows)
        throw std::invalid_argument("multiply: inner dimensions disagree");
    SparseMatrix out(second.rows, first.cols);
    std::vector<std::int64_t> acc(static_cast<std::size_t>(second.rows), 0);
    for (int j = 0; j < first.cols; ++j) {
        for (const auto& [mid, v1] : first.columns[static_cast<std::size_t>(j)])
            for (const auto& [row, v2] : second.columns[static_cast<std::size_t>(mid)])
                acc[static_cast<std::size_t>(row)] += static_cast<std::int64_t>(v1) * v2;
        for (const auto& [mid, v1] : first.columns[static_cast<std::size_t>(j)])
            for (const auto& [row, v2] : second.columns[static_cast<std::size_t>(mid)]) {
                auto& a = acc[static_cast<std::size_t>(row)];
                if (a != 0) {
                    out.add_entry(row, j, static_cast<int>(a));
                    a = 0;
                }
            }
    }
    return out;
}

int GradedComplex::coefficient(const SchubertSet& source, const SchubertSet& target) const {
    const int m = dim(source);
    if (dim(target) != m + 1 || m < 0 || m >= top_degree()) return 0;
    auto locate = [](const std::vector<SchubertSet>& cells, const SchubertSet& s) -> int {
        auto it = std::lower_bound(cells.begin(), cells.end(), s,
                                   [](const SchubertSet& a, const SchubertSet& b) {
                                       return a.elements() < b.elements();
                                   });
        if (it == cells.end() || !(*it == s)) return -1;
        return static_cast<int>(it - cells.begin());
    };
    const int si = locate(basis[static_cast<std::size_t>(m)], source);
    const int ti = locate(basis[static_cast<std::size_t>(m) + 1], target);
    if (si < 0 || ti < 0) return 0;
    const auto& mat = between(m);
    const int col = direction == Direction::Cohomological ? si : ti;
    const int row = direction == Direction::Cohomological ? ti : si;
    for (const auto& [r, v] : mat.columns[static_cast<std::size_t>(col)])
        if (r == row) return v;
    return 0;
}

std::pair<int, int> sigma_signs(const SchubertSet& s, const SchubertSet& t) {
    if (s.n() != t.n() || s.k() != t.k())
        throw invalid_cover_error("sigma_signs: operands live in different Grassmannians");
    const int k = s.k();
    int r = 0;
    for (int i = 1; i <= k; ++i) {
        if (t.element(i) == s.element(i)) continue;
        if (t.element(i) == s.element(i) + 1 && r == 0) {
            r = i;
            continue;
        }
        throw invalid_cover_error("sigma_signs: " + t.to_string() + " is not a cover " +
                                  s.to_string() + "_r");
    }
    if (r == 0)
        throw invalid_cover_error("sigma_signs: sets are equal, not a cover");
    const int tail = partial_dim(s, r);                  // d_r(S)
    const int tail_above = tail - (s.element(r) - r);    // d_{r+1}(S)
    const int theta0 = ((1 + k + r + tail_above) & 1) ? -1 : 1;
    const int theta_pi = (tail & 1) ? -1 : 1;
    return {theta0, theta_pi};
}

int diff_coefficient(const SchubertSet& s, int r) {
    const int k = s.k();
    if (r < 1 || r > k) throw std::invalid_argument("diff_coefficient: r must be in [1, k]");
    const int sr = s.element(r);
    const int next = (r == k) ? s.n() + 1 : s.element(r + 1);
    if (next - sr <= 1) return 0;       // S_r not a valid subset
    if (((k - sr) & 1) == 0) return 0;  // parity kills the two link signs
    return (partial_dim(s, r) & 1) ? -2 : 2;
}

std::vector<CoverCoefficient> boundary(const SchubertSet& s) {
    std::vector<CoverCoefficient> out;
    for (int r = 1; r <= s.k(); ++r) {
        const int c = diff_coefficient(s, r);
        if (c != 0) out.push_back({s, r, s.with_incremented(r), c});
    }
    return out;
}

GradedComplex build_complex(int n, int k, Direction direction) {
    detail::check_enumeration_args(n, k);
    GradedComplex c;
    c.n = n;
    c.k = k;
    c.direction = direction;
    const int top = k * (n - k);
    c.basis.resize(static_cast<std::size_t>(top) + 1);
    for_each_subset(n, k, [&](std::span<const int> elems) {
        c.basis[static_cast<std::size_t>(dim(elems))].emplace_back(
            n, std::vector<int>(elems.begin(), elems.end()));
    });

    std::vector<std::unordered_map<std::uint64_t, int>> index(c.basis.size());
    for (std::size_t m = 0; m < c.basis.size(); ++m)
        for (std::size_t i = 0; i < c.basis[m].size(); ++i)
            index[m].emplace(c.basis[m][i].bits(), static_cast<int>(i));

    // Assemble the coboundary first: column S lists its at-most-k covers.
    c.diff.reserve(static_cast<std::size_t>(top));
    for (int m = 0; m < top; ++m) {
        SparseMatrix delta(static_cast<int>(c.basis[static_cast<std::size_t>(m) + 1].size()),
                           static_cast<int>(c.basis[static_cast<std::size_t>(m)].size()));
        const auto& cells = c.basis[static_cast<std::size_t>(m)];
        for (std::size_t j = 0; j < cells.size(); ++j)
            for (const auto& term : boundary(cells[j]))
                delta.add_entry(index[static_cast<std::size_t>(m) + 1].at(term.target.bits()),
                                static_cast<int>(j), term.value);
        c.diff.push_back(direction == Direction::Cohomological ? std::move(delta)
                                                               : delta.transposed());
    }
    return c;
}

std::int64_t euler_characteristic(const GradedComplex& c) {
    std::int64_t chi = 0;
    for (std::size_t m = 0; m < c.basis.size(); ++m)
        chi += (m & 1) ? -static_cast<std::int64_t>(c.basis[m].size())
                       : static_cast<std::int64_t>(c.basis[m].size());
    return chi;
}

bool differentials_compose_to_zero(const GradedComplex& c) {
    for (int m = 0; m + 1 < static_cast<int>(c.diff.size()); ++m) {
        const auto& low = c.between(m);
        const auto& high = c.between(m + 1);
        const SparseMatrix composite = c.direction == Direction::Cohomological
                                           ? multiply(high, low)   // delta^{m+1} o delta^m
                                           : multiply(low, high);  // d_{m+1} o d_{m+2}
        if (!composite.is_zero()) return false;
    }
    return true;
}

} // namespace schubert
