#pragma once

#include <string>

#include <json.hpp>

#include "schubert/complex.hpp"
#include "schubert/decomposition.hpp"
#include "schubert/rings.hpp"

namespace schubert {

/// Node id in file formats: hyphen-joined elements, "1-2-4".
std::string cell_id(const SchubertSet& s);
/// Display label: concatenated digits when n <= 9 ("124"), else the id.
std::string cell_label(const SchubertSet& s);

// -- graded modules -----------------------------------------------------------

/// Schema: {n, k, coefficients, groups: [{degree, free_rank, torsion: [ints]}]}.
/// Every degree appears, including trivial ones.
nlohmann::json module_to_json(const GradedModule& hm, int n, int k);

struct ParsedModule {
    int n = 0;
    int k = 0;
    GradedModule module;
};
ParsedModule module_from_json(const nlohmann::json& j);

/// "degree,free_rank,torsion" with the torsion multiset ';'-joined.
std::string module_to_csv(const GradedModule& hm);

/// For Z coefficients (all torsion of order 2): the paper's two-column layout,
/// number of Z summands and number of Z/2 summands per degree. Other rings get
/// free rank plus the torsion multiset, runs grouped as d^count.
std::string module_to_table(const GradedModule& hm, int n, int k);

// -- the complex as an edge list ----------------------------------------------

/// Every nonzero differential coefficient, in canonical order: sources in lex
/// basis order, r ascending within a source.
std::vector<CoverCoefficient> complex_edges(int n, int k);

nlohmann::json edges_to_json(int n, int k);
std::string edges_to_csv(int n, int k);

/// Graphviz rendering of the coefficient graph. One node per cell, one edge
/// per nonzero coefficient, labeled "+2"/"-2" with distinct styles; node and
/// edge order is fixed, so output is byte-stable.
std::string complex_to_dot(int n, int k);

nlohmann::json decomposition_report_to_json(const DecompositionReport& report);

/// Writes content to path, reporting failures with the path included.
void write_text_file(const std::string& path, const std::string& content);

} // namespace schubert
