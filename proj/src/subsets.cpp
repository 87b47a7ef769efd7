#include "schubert/subsets.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace schubert {

SchubertSet::SchubertSet(int n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements)) {
    if (n < 1 || n > max_ambient_dimension)
        throw unsupported_size_error("ambient dimension must be in [1, 64], got " +
                                     std::to_string(n));
    if (static_cast<int>(elements_.size()) > n)
        throw std::invalid_argument("subset larger than ambient set");
    int prev = 0;
    for (int e : elements_) {
        if (e <= prev || e > n)
            throw std::invalid_argument("subset elements must be strictly increasing in [1, n]");
        prev = e;
        bits_ |= std::uint64_t{1} << (e - 1);
    }
}

SchubertSet SchubertSet::from_bits(int n, std::uint64_t bits) {
    std::vector<int> elems;
    elems.reserve(static_cast<std::size_t>(std::popcount(bits)));
    for (std::uint64_t b = bits; b != 0; b &= b - 1)
        elems.push_back(std::countr_zero(b) + 1);
    return SchubertSet(n, std::move(elems));
}

SchubertSet SchubertSet::with_incremented(int r) const {
    std::vector<int> elems = elements_;
    ++elems[static_cast<std::size_t>(r) - 1];
    return SchubertSet(n_, std::move(elems));
}

std::string SchubertSet::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) out << ',';
        out << elements_[i];
    }
    out << '}';
    return out.str();
}

int CellClassification::in_size() const { return std::popcount(in_mask); }
int CellClassification::out_size() const { return std::popcount(out_mask); }

static std::vector<int> mask_indices(std::uint64_t mask) {
    std::vector<int> out;
    for (std::uint64_t b = mask; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::vector<int> CellClassification::in_indices() const { return mask_indices(in_mask); }
std::vector<int> CellClassification::out_indices() const { return mask_indices(out_mask); }

namespace detail {
void check_enumeration_args(int n, int k) {
    if (n < 1 || n > max_ambient_dimension)
        throw unsupported_size_error("ambient dimension must be in [1, 64], got " +
                                     std::to_string(n));
    if (k < 0 || k > n)
        throw std::invalid_argument("subset size must be in [0, n]");
}
} // namespace detail

std::int64_t binomial(int n, int k) {
    if (n < 0 || n > max_ambient_dimension) throw std::invalid_argument("binomial: n out of range");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::int64_t>(acc);
}

std::vector<SchubertSet> enumerate_subsets(int n, int k) {
    detail::check_enumeration_args(n, k);
    std::vector<SchubertSet> out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    for_each_subset(n, k, [&](std::span<const int> elems) {
        out.emplace_back(n, std::vector<int>(elems.begin(), elems.end()));
    });
    return out;
}

bool leq(const SchubertSet& s, const SchubertSet& t) {
    if (s.n() != t.n() || s.k() != t.k())
        throw std::invalid_argument("leq: operands live in different Grassmannians");
    for (int i = 0; i < s.k(); ++i)
        if (s.elements()[static_cast<std::size_t>(i)] > t.elements()[static_cast<std::size_t>(i)])
            return false;
    return true;
}

int dim(std::span<const int> elements) {
    int d = 0;
    for (std::size_t i = 0; i < elements.size(); ++i)
        d += elements[i] - static_cast<int>(i) - 1;
    return d;
}

int dim(const SchubertSet& s) { return dim(s.span()); }

int partial_dim(std::span<const int> elements, int r) {
    const int k = static_cast<int>(elements.size());
    if (r < 0 || r > k) throw std::invalid_argument("partial_dim: r must be in [0, k]");
    int d = 0;
    for (int i = std::max(r, 1); i <= k; ++i)
        d += elements[static_cast<std::size_t>(i) - 1] - i;
    return d;
}

int partial_dim(const SchubertSet& s, int r) { return partial_dim(s.span(), r); }

std::vector<ZIndexPair> z_index_set(const SchubertSet& s) {
    std::vector<ZIndexPair> out;
    out.reserve(static_cast<std::size_t>(dim(s)));
    for (int i = 1; i <= s.k(); ++i)
        for (int j = s.element(i) - 1; j >= i; --j) // descending j within fixed i
            out.push_back({i, j});
    return out;
}

std::vector<std::int64_t> cell_counts(int n, int k) {
    detail::check_enumeration_args(n, k);
    const int top = k * (n - k);
    // Coefficients of the Gaussian binomial [n, k]_q, built as the product
    // prod_{i=1..k} (1 - q^{n-k+i})/(1 - q^i). Interleaving each multiply
    // with its divide keeps every intermediate polynomial equal to a genuine
    // [n-k+i, i]_q, so coefficients stay nonnegative and within int64.
    std::vector<std::int64_t> c(static_cast<std::size_t>(top) + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= k; ++i) {
        const int a = n - k + i;
        for (int m = top; m >= a; --m) c[static_cast<std::size_t>(m)] -= c[static_cast<std::size_t>(m - a)];
        for (int m = i; m <= top; ++m) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - i)];
    }
    return c;
}

std::int64_t cell_count(int n, int k, int m) {
    detail::check_enumeration_args(n, k);
    if (m < 0 || m > k * (n - k))
        throw std::invalid_argument("cell_count: degree out of [0, k(n-k)]");
    return cell_counts(n, k)[static_cast<std::size_t>(m)];
}

CellClassification classify(std::span<const int> elements, int n) {
    const int k = static_cast<int>(elements.size());
    CellClassification c;
    int prev = 0; // s_0 sentinel
    for (int i = 1; i <= k; ++i) {
        const int si = elements[static_cast<std::size_t>(i) - 1];
        const int next = (i == k) ? n + 1 : elements[static_cast<std::size_t>(i)]; // s_{k+1} sentinel
        if (((si ^ k) & 1) == 0) {
            if (prev < si - 1) c.in_mask |= std::uint64_t{1} << (i - 1);
        } else {
            if (si + 1 < next) c.out_mask |= std::uint64_t{1} << (i - 1);
        }
        prev = si;
    }
    if (c.in_mask == 0 && c.out_mask == 0) {
        c.kind = CellKind::Free;
    } else {
        const std::uint64_t both = c.in_mask | c.out_mask;
        const std::uint64_t min_bit = both & (~both + 1);
        c.kind = (c.out_mask & min_bit) ? CellKind::KernelSide : CellKind::CokernelSide;
    }
    return c;
}

CellClassification classify(const SchubertSet& s) { return classify(s.span(), s.n()); }

bool admissible_leq(const SchubertSet& s, const SchubertSet& t) {
    if (s.n() != t.n() || s.k() != t.k())
        throw std::invalid_argument("admissible_leq: operands live in different Grassmannians");
    const std::uint64_t active = classify(s).out_mask & classify(t).in_mask;
    for (int i = 1; i <= s.k(); ++i) {
        const int want = (active >> (i - 1)) & 1 ? t.element(i) - 1 : t.element(i);
        if (s.element(i) != want) return false;
    }
    return true;
}

} // namespace schubert
