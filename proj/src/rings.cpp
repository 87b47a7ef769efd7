#include "schubert/rings.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubert {

CoefficientRing CoefficientRing::mod(std::int64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    return {Tag::Mod, m};
}

std::optional<CoefficientRing> CoefficientRing::parse(std::string_view text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    if (text.size() > 2 && text.substr(0, 2) == "Z/") {
        std::int64_t m = 0;
        const char* first = text.data() + 2;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, m);
        if (ec == std::errc{} && ptr == last && m >= 2) return mod(m);
    }
    return std::nullopt;
}

std::string CoefficientRing::name() const {
    switch (tag) {
    case Tag::Integers: return "Z";
    case Tag::Rationals: return "Q";
    case Tag::Mod: return "Z/" + std::to_string(modulus);
    }
    return "?";
}

std::int64_t CoefficientRing::kernel_of_two_order() const {
    switch (tag) {
    case Tag::Integers: return 1;
    case Tag::Rationals: return 1;
    case Tag::Mod: return std::gcd(std::int64_t{2}, modulus);
    }
    return 1;
}

std::int64_t CoefficientRing::cokernel_of_two_order() const {
    switch (tag) {
    case Tag::Integers: return 2;
    case Tag::Rationals: return 1;
    case Tag::Mod: return std::gcd(std::int64_t{2}, modulus);
    }
    return 1;
}

void GradedModule::add_cyclic(int degree, std::int64_t order, std::int64_t multiplicity) {
    if (order <= 1 || multiplicity <= 0) return;
    GradedGroup& g = at(degree);
    if (ring.tag == CoefficientRing::Tag::Mod && order == ring.modulus) {
        g.free_rank += multiplicity;
        return;
    }
    g.torsion.insert(g.torsion.end(), static_cast<std::size_t>(multiplicity), order);
}

void GradedModule::add_free(int degree, std::int64_t multiplicity) {
    at(degree).free_rank += multiplicity;
}

void GradedModule::normalize() {
    for (auto& g : groups) std::sort(g.torsion.begin(), g.torsion.end());
}

std::string group_to_string(const GradedGroup& g, const CoefficientRing& ring) {
    if (g.free_rank == 0 && g.torsion.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << " + ";
        first = false;
    };
    if (g.free_rank > 0) {
        sep();
        out << ring.name();
        if (g.free_rank > 1) out << '^' << g.free_rank;
    }
    // torsion is sorted; print runs as (Z/d)^count
    for (std::size_t i = 0; i < g.torsion.size();) {
        std::size_t j = i;
        while (j < g.torsion.size() && g.torsion[j] == g.torsion[i]) ++j;
        sep();
        if (j - i > 1)
            out << "(Z/" << g.torsion[i] << ")^" << (j - i);
        else
            out << "Z/" << g.torsion[i];
        i = j;
    }
    return out.str();
}

} // namespace schubert
