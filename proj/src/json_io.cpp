#include "kakeya/json_io.hpp"

#include <fstream>
#include <sstream>

namespace kakeya {

json point_to_json(const ProjPoint& p) {
    json a = json::array();
    for (int i = 0; i < 4; ++i) a.push_back(int(p.v[std::size_t(i)]));
    return a;
}

ProjPoint point_from_json(const Field& f, const json& j) {
    if (!j.is_array() || j.size() != 4) throw InvalidArgument("point must be an array of 4 codes");
    std::array<Fel, 4> raw{};
    for (int i = 0; i < 4; ++i) {
        int c = j[std::size_t(i)].get<int>();
        if (c < 0 || c >= int(f.q())) throw InvalidArgument("point coordinate out of range");
        raw[std::size_t(i)] = Fel(c);
    }
    return normalize_point(f, raw, 4);
}

json line_to_json(const ProjLine& l) {
    json a = json::array();
    for (const auto& row : l.row) {
        json r = json::array();
        for (Fel c : row) r.push_back(int(c));
        a.push_back(std::move(r));
    }
    return a;
}

ProjLine line_from_json(const Field& f, const json& j) {
    if (!j.is_array() || j.size() != 2) throw InvalidArgument("line must be an array of 2 points");
    ProjPoint p = point_from_json(f, j[0]);
    ProjPoint q = point_from_json(f, j[1]);
    return line_through(f, p, q);
}

json form_to_json(const QuadraticForm& q) {
    json a = json::array();
    for (Fel c : q.coef) a.push_back(int(c));
    return a;
}

QuadraticForm form_from_json(const json& j, int dim) {
    std::size_t want = dim == 3 ? 6 : 10;
    if (!j.is_array() || j.size() != want)
        throw InvalidArgument("form must be an array of " + std::to_string(want) + " codes");
    QuadraticForm q;
    q.dim = dim;
    for (const auto& c : j) q.coef.push_back(Fel(c.get<int>()));
    return q;
}

json line_set_to_json(const KakeyaLineSet& l) {
    json j;
    j["p"] = l.field.p();
    j["deg"] = l.field.deg();
    json mod = json::array();
    for (Fel c : l.field.modulus()) mod.push_back(int(c));
    j["modulus"] = std::move(mod);
    j["conic"] = form_to_json(l.conic.form);
    json lines = json::array();
    for (const ProjLine& line : l.lines) lines.push_back(line_to_json(line));
    j["lines"] = std::move(lines);
    return j;
}

KakeyaLineSet line_set_from_json(const json& j) {
    unsigned p = j.at("p").get<unsigned>();
    unsigned deg = j.at("deg").get<unsigned>();
    std::vector<Fel> mod;
    for (const auto& c : j.at("modulus")) mod.push_back(Fel(c.get<int>()));
    Field f(p, deg, std::move(mod));
    Conic conic = conic_from_form(f, form_from_json(j.at("conic"), 3));
    std::vector<ProjLine> lines;
    for (const auto& lj : j.at("lines")) lines.push_back(line_from_json(f, lj));
    return make_line_set(std::move(f), std::move(conic), std::move(lines));
}

json label_to_json(const ConstructionLabel& label) {
    json j;
    j["variant"] = variant_name(label.variant);
    if (label.variant == Variant::Other) return j;
    j["k"] = label.k;
    j["split"] = json::array({std::min(label.side_r, label.side_rp),
                              std::max(label.side_r, label.side_rp)});
    j["quadric"] = form_to_json(*label.quadric);
    j["r_side"] = label.r_side;
    if (label.variant == Variant::SecantVariant) {
        j["secant_index"] = label.secant_index;
        j["secant_line"] = line_to_json(*label.secant_line);
        j["second_point_class"] = secant_detail_name(label.detail);
    }
    return j;
}

json graph_to_json(const CliqueGraph& g) {
    json j;
    j["n"] = g.n;
    json edges = json::array();
    for (int i = 0; i < g.n; ++i)
        for (int k = i + 1; k < g.n; ++k)
            if (g.adjacent(i, k)) edges.push_back(json::array({i, k}));
    j["edges"] = std::move(edges);
    return j;
}

CliqueGraph graph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InvalidArgument("edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return graph_from_edges(n, edges);
}

json mantel_to_json(const MantelReport& r) {
    json j;
    j["n"] = r.n;
    j["bound"] = r.bound;
    j["max_edges_found"] = r.max_edges_found;
    j["extremal_count"] = r.extremal_count;
    j["all_extremal_balanced_bipartite"] = r.all_extremal_balanced_bipartite;
    j["graphs_checked"] = r.graphs_checked;
    j["holds"] = r.holds();
    return j;
}

json hanson_toft_to_json(const HansonToftReport& r) {
    json j;
    j["n"] = r.n;
    json per = json::array();
    for (const auto& d : r.checked) {
        per.push_back({{"l", d.l},
                       {"edges", d.edges},
                       {"graph_count", d.graph_count},
                       {"all_bipartite", d.all_bipartite}});
    }
    j["checked"] = std::move(per);
    j["tight_l"] = r.tight_l;
    j["tight_witness_exists"] = r.tight_witness_exists;
    if (r.tight_witness_exists) {
        j["tight_witness_canon"] = canonical_hex(r.n, r.tight_witness_canon);
        j["tight_witness"] = graph_to_json(graph_from_mask(r.n, r.tight_witness_canon));
    }
    j["holds"] = r.holds();
    return j;
}

json main_lemma_to_json(const MainLemmaReport& r) {
    json j;
    j["n"] = r.n;
    j["threshold"] = r.threshold;
    j["qualifying"] = r.qualifying;
    j["violations"] = r.violations;
    json witnesses = json::array();
    for (std::uint32_t mask : r.violation_masks)
        witnesses.push_back(graph_to_json(graph_from_mask(r.n, mask)));
    j["violation_witnesses"] = std::move(witnesses);
    j["max_c_nonbipartite"] = r.max_c_nonbipartite;
    j["graphs_checked"] = r.graphs_checked;
    j["holds"] = r.holds();
    return j;
}

std::string graph_census_csv(const std::vector<CliqueGraph>& graphs) {
    std::ostringstream out;
    out << "canonical_form_hex,edge_count,C_value,edge_disjoint,bipartite\n";
    for (const CliqueGraph& g : graphs) {
        out << canonical_hex(g.n, canonical_form(g)) << ',' << g.edge_count() << ',' << c_value(g)
            << ',' << (edge_disjoint(g) ? 1 : 0) << ',' << (is_bipartite(g) ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << content;
}

} // namespace kakeya
