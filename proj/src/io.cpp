#include "schubert/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace schubert {

std::string cell_id(const SchubertSet& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.elements().size(); ++i) {
        if (i) out << '-';
        out << s.elements()[i];
    }
    return out.str();
}

std::string cell_label(const SchubertSet& s) {
    if (s.n() > 9) return cell_id(s);
    std::string out;
    for (int e : s.elements()) out += static_cast<char>('0' + e);
    return out;
}

nlohmann::json module_to_json(const GradedModule& hm, int n, int k) {
    nlohmann::json groups = nlohmann::json::array();
    for (int m = 0; m <= hm.top_degree(); ++m) {
        const GradedGroup& g = hm.at(m);
        groups.push_back({{"degree", m}, {"free_rank", g.free_rank}, {"torsion", g.torsion}});
    }
    return {{"n", n}, {"k", k}, {"coefficients", hm.ring.name()}, {"groups", std::move(groups)}};
}

ParsedModule module_from_json(const nlohmann::json& j) {
    ParsedModule parsed;
    parsed.n = j.at("n").get<int>();
    parsed.k = j.at("k").get<int>();
    const auto ring = CoefficientRing::parse(j.at("coefficients").get<std::string>());
    if (!ring) throw std::invalid_argument("unknown coefficient ring in JSON");
    parsed.module.ring = *ring;
    const auto& groups = j.at("groups");
    parsed.module.groups.resize(groups.size());
    for (const auto& g : groups) {
        const int degree = g.at("degree").get<int>();
        if (degree < 0 || degree >= static_cast<int>(parsed.module.groups.size()))
            throw std::invalid_argument("degree out of range in JSON");
        GradedGroup& target = parsed.module.at(degree);
        target.free_rank = g.at("free_rank").get<std::int64_t>();
        target.torsion = g.at("torsion").get<std::vector<std::int64_t>>();
    }
    return parsed;
}

std::string module_to_csv(const GradedModule& hm) {
    std::ostringstream out;
    out << "degree,free_rank,torsion\n";
    for (int m = 0; m <= hm.top_degree(); ++m) {
        const GradedGroup& g = hm.at(m);
        out << m << ',' << g.free_rank << ',';
        for (std::size_t i = 0; i < g.torsion.size(); ++i) {
            if (i) out << ';';
            out << g.torsion[i];
        }
        out << '\n';
    }
    return out.str();
}

static std::string torsion_runs(const std::vector<std::int64_t>& torsion) {
    if (torsion.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        if (i) out << ' ';
        out << torsion[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

std::string module_to_table(const GradedModule& hm, int n, int k) {
    const bool integral = hm.ring.tag == CoefficientRing::Tag::Integers;
    bool all_two = true;
    for (const auto& g : hm.groups)
        for (std::int64_t d : g.torsion)
            if (d != 2) all_two = false;

    std::ostringstream out;
    out << "cohomology of Gr_" << k << '(' << n << ") with " << hm.ring.name()
        << " coefficients\n";
    if (integral && all_two) {
        out << "degree\tZ\tZ/2\n";
        for (int m = 0; m <= hm.top_degree(); ++m) {
            const GradedGroup& g = hm.at(m);
            out << "H^" << m << '\t' << g.free_rank << '\t' << g.torsion.size() << '\n';
        }
    } else {
        out << "degree\t" << hm.ring.name() << "\ttorsion\n";
        for (int m = 0; m <= hm.top_degree(); ++m) {
            const GradedGroup& g = hm.at(m);
            out << "H^" << m << '\t' << g.free_rank << '\t' << torsion_runs(g.torsion) << '\n';
        }
    }
    return out.str();
}

std::vector<CoverCoefficient> complex_edges(int n, int k) {
    std::vector<CoverCoefficient> edges;
    for_each_subset(n, k, [&](std::span<const int> elems) {
        SchubertSet s(n, std::vector<int>(elems.begin(), elems.end()));
        for (auto& term : boundary(s)) edges.push_back(std::move(term));
    });
    return edges;
}

nlohmann::json edges_to_json(int n, int k) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : complex_edges(n, k))
        rows.push_back({{"source", cell_id(e.source)},
                        {"target", cell_id(e.target)},
                        {"r", e.r},
                        {"value", e.value}});
    return {{"n", n}, {"k", k}, {"edges", std::move(rows)}};
}

std::string edges_to_csv(int n, int k) {
    std::ostringstream out;
    out << "source,target,r,value\n";
    for (const auto& e : complex_edges(n, k))
        out << cell_id(e.source) << ',' << cell_id(e.target) << ',' << e.r << ',' << e.value
            << '\n';
    return out.str();
}

std::string complex_to_dot(int n, int k) {
    const GradedComplex c = build_complex(n, k, Direction::Cohomological);
    std::ostringstream out;
    out << "digraph \"gr_" << k << "_" << n << "\" {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box];\n";
    for (int m = 0; m <= c.top_degree(); ++m) {
        out << "  { rank=same;";
        for (const auto& cell : c.basis[static_cast<std::size_t>(m)])
            out << " \"" << cell_id(cell) << "\" [label=\"" << cell_label(cell) << "\"];";
        out << " }\n";
    }
    for (const auto& e : complex_edges(n, k)) {
        out << "  \"" << cell_id(e.source) << "\" -> \"" << cell_id(e.target) << "\" [label=\""
            << (e.value > 0 ? "+2" : "-2") << "\", style=" << (e.value > 0 ? "solid" : "dashed")
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::json decomposition_report_to_json(const DecompositionReport& report) {
    return {{"ok", report.ok},
            {"n", report.n},
            {"k", report.k},
            {"summands", report.summand_count},
            {"free_summands", report.free_summand_count},
            {"covered_cells", report.covered_cells},
            {"per_degree_generators", report.per_degree_generators},
            {"failure", report.failure}};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

} // namespace schubert
