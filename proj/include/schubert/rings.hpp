#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// One of Z, Q, Z/m. Supplies the kernel and cokernel of multiplication by 2,
/// which is all the closed formula needs from a ring.
struct CoefficientRing {
    enum class Tag { Integers, Rationals, Mod };

    Tag tag = Tag::Integers;
    std::int64_t modulus = 0; // >= 2 exactly when tag == Mod

    static CoefficientRing integers() { return {Tag::Integers, 0}; }
    static CoefficientRing rationals() { return {Tag::Rationals, 0}; }
    static CoefficientRing mod(std::int64_t m);

    /// Accepts "Z", "Q", "Z/<m>" with m >= 2.
    static std::optional<CoefficientRing> parse(std::string_view text);
    std::string name() const;

    /// Order of ker(R --2--> R): 1 for Z and Q, gcd(2, m) for Z/m.
    std::int64_t kernel_of_two_order() const;
    /// Order of coker(R --2--> R): 2 for Z, 1 for Q, gcd(2, m) for Z/m.
    std::int64_t cokernel_of_two_order() const;

    bool operator==(const CoefficientRing&) const = default;
};

/// One graded piece: free_rank copies of the ring plus finite cyclic summands.
struct GradedGroup {
    std::int64_t free_rank = 0;
    std::vector<std::int64_t> torsion; // orders >= 2, ascending

    bool operator==(const GradedGroup&) const = default;
};

/// A cohomology (or homology) group per degree, degrees 0 .. size-1.
struct GradedModule {
    CoefficientRing ring;
    std::vector<GradedGroup> groups;

    int top_degree() const { return static_cast<int>(groups.size()) - 1; }
    GradedGroup& at(int degree) { return groups[static_cast<std::size_t>(degree)]; }
    const GradedGroup& at(int degree) const { return groups[static_cast<std::size_t>(degree)]; }

    /// Adds a cyclic summand of the given order in the given degree. Order 1
    /// vanishes; over Z/m an order-m summand is a full copy of the ring and
    /// counts toward free_rank. Call normalize() once all pieces are in.
    void add_cyclic(int degree, std::int64_t order, std::int64_t multiplicity = 1);
    void add_free(int degree, std::int64_t multiplicity = 1);

    /// Sorts every torsion list; call after bulk add_cyclic.
    void normalize();

    bool operator==(const GradedModule&) const = default;
};

/// "Z", "0", "Z/2", "Z^3 + (Z/2)^33", "Q^2", ... for one graded piece.
std::string group_to_string(const GradedGroup& g, const CoefficientRing& ring);

} // namespace schubert
