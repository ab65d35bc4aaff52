#pragma once

#include <string>

#include <json.hpp>

#include "kakeya/kakeya.hpp"

namespace kakeya {

using json = nlohmann::json;

json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const Field& f, const json& j);

json line_to_json(const ProjLine& l);
ProjLine line_from_json(const Field& f, const json& j);

json form_to_json(const QuadraticForm& q);
QuadraticForm form_from_json(const json& j, int dim);

/// Line-set file: { "p", "deg", "modulus" (constant term first), "conic"
/// (6 coefficient codes), "lines" ([ [point, point] ] in conic-point
/// order) }. Emitted content is canonical: rewriting the same set produces
/// byte-identical text.
json line_set_to_json(const KakeyaLineSet& l);
KakeyaLineSet line_set_from_json(const json& j);

json label_to_json(const ConstructionLabel& label);

/// Graph file: { "n": int, "edges": [[i,j], ...] } with i < j, sorted
/// lexicographically.
json graph_to_json(const CliqueGraph& g);
CliqueGraph graph_from_json(const json& j);

json mantel_to_json(const MantelReport& r);
json hanson_toft_to_json(const HansonToftReport& r);
json main_lemma_to_json(const MainLemmaReport& r);

/// Census CSV rows: canonical_form_hex, edge_count, C_value, edge_disjoint,
/// bipartite; ascending canonical form.
std::string graph_census_csv(const std::vector<CliqueGraph>& graphs);

/// Serializes with a fixed layout (2-space indent, sorted keys, trailing
/// newline) so reruns overwrite files with byte-identical content.
std::string canonical_dump(const json& j);
void write_file(const std::string& path, const std::string& content);

} // namespace kakeya
