#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kakeya/classify.hpp"
#include "kakeya/json_io.hpp"

namespace py = pybind11;
using namespace kakeya;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

json py_to_json(const py::handle& obj) {
    return json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

Field field_for(unsigned q) {
    auto [p, deg] = factor_prime_power(q);
    return Field(p, deg);
}

py::object construct_split_py(unsigned q, int k) {
    Field f = field_for(q);
    Geometry geom(f);
    KakeyaLineSet ls = construct_regulus_split(geom, k, standard_quadric(geom));
    return json_to_py(line_set_to_json(ls));
}

py::object construct_secant_py(unsigned q, int k, int secant_index) {
    Field f = field_for(q);
    Geometry geom(f);
    HyperbolicQuadric quad = standard_quadric(geom);
    auto choices = enumerate_secant_choices(geom, k, quad);
    if (choices.empty()) throw InvalidArgument("no qualifying secant for this k");
    if (secant_index < 0 || secant_index >= int(choices.size()))
        throw InvalidArgument("secant index out of range");
    KakeyaLineSet ls =
        construct_secant_variant(geom, k, quad, choices[std::size_t(secant_index)].line);
    return json_to_py(line_set_to_json(ls));
}

int secant_choice_count_py(unsigned q, int k) {
    Field f = field_for(q);
    Geometry geom(f);
    return int(enumerate_secant_choices(geom, k, standard_quadric(geom)).size());
}

int set_size_py(const py::dict& d) {
    return kakeya_points(line_set_from_json(py_to_json(d))).size;
}

int size_via_cliques_py(const py::dict& d) {
    return size_via_cliques(line_set_from_json(py_to_json(d)));
}

py::object recognize_py(const py::dict& d) {
    KakeyaLineSet ls = line_set_from_json(py_to_json(d));
    Geometry geom(ls.field);
    return json_to_py(label_to_json(recognize(geom, ls)));
}

py::object classify_py(unsigned q, py::object threshold, int workers, bool symmetry) {
    SearchConfig config{q, std::nullopt, symmetry, workers};
    if (!threshold.is_none()) config.threshold = threshold.cast<int>();
    return json_to_py(report_to_json(enumerate_all(config)));
}

py::object verify_py(unsigned q) {
    ClassificationReport rep = enumerate_all(SearchConfig{q, std::nullopt, false, 1});
    json bundle;
    bundle["theorem"] = verify_theorem(rep).certificate;
    bundle["remark_census"] = verify_remark_census(rep).certificate;
    bundle["pentagon"] = verify_pentagon_excluded(rep).certificate;
    return json_to_py(bundle);
}

py::object graph_census_py(int n, bool edge_disjoint_only) {
    auto graphs = enumerate_graphs(
        n, edge_disjoint_only ? GraphFilter::EdgeDisjointCliques : GraphFilter::All);
    json arr = json::array();
    for (const CliqueGraph& g : graphs) {
        json e;
        e["canon"] = canonical_hex(n, canonical_form(g));
        e["edges"] = g.edge_count();
        e["c_value"] = c_value(g);
        e["edge_disjoint"] = edge_disjoint(g);
        e["bipartite"] = is_bipartite(g);
        std::string name = graph_name(n, canonical_form(g));
        if (!name.empty()) e["name"] = name;
        arr.push_back(std::move(e));
    }
    return json_to_py(arr);
}

py::object sporadic_py(int n, int w2_prime) {
    CliqueGraph g = sporadic_graph(n, w2_prime);
    json j;
    j["n"] = n;
    j["edges"] = g.edge_count();
    j["c_value"] = c_value(g);
    j["max_clique_size_hist"] = g.k_hist;
    return json_to_py(j);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kakeya line sets in the linear representation of a conic";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<StructureError>(m, "StructureError");

    py::class_<Field>(m, "Field")
        .def(py::init<unsigned, unsigned>(), py::arg("p"), py::arg("deg"))
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("deg", &Field::deg)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("modulus",
                               [](const Field& f) {
                                   std::vector<int> m(f.modulus().begin(), f.modulus().end());
                                   return m;
                               })
        .def("add", [](const Field& f, int a, int b) { return int(f.add(Fel(a), Fel(b))); })
        .def("sub", [](const Field& f, int a, int b) { return int(f.sub(Fel(a), Fel(b))); })
        .def("mul", [](const Field& f, int a, int b) { return int(f.mul(Fel(a), Fel(b))); })
        .def("neg", [](const Field& f, int a) { return int(f.neg(Fel(a))); })
        .def("inv", [](const Field& f, int a) { return int(f.inv(Fel(a))); })
        .def("pow", [](const Field& f, int a, unsigned long long e) {
            return int(f.pow(Fel(a), e));
        })
        .def("elements", [](const Field& f) {
            std::vector<int> e;
            for (Fel x : f.elements()) e.push_back(int(x));
            return e;
        });

    m.def("make_field", [](unsigned p, unsigned deg) { return make_field(p, deg); },
          py::arg("p"), py::arg("deg"));
    m.def("gamma", &kakeya::gamma, py::arg("q"),
          "smallest possible covered-set size, floor((3q^2+2q)/4)");
    m.def("classification_threshold", &classification_threshold, py::arg("q"));
    m.def("construct_regulus_split", &construct_split_py, py::arg("q"), py::arg("k"));
    m.def("construct_secant_variant", &construct_secant_py, py::arg("q"), py::arg("k"),
          py::arg("secant_index") = 0);
    m.def("secant_choice_count", &secant_choice_count_py, py::arg("q"), py::arg("k"));
    m.def("set_size", &set_size_py, py::arg("line_set"), "covered affine points, counted directly");
    m.def("size_via_cliques", &size_via_cliques_py, py::arg("line_set"),
          "covered size through the intersection-graph clique histogram");
    m.def("recognize", &recognize_py, py::arg("line_set"));
    m.def("classify", &classify_py, py::arg("q"), py::arg("threshold") = py::none(),
          py::arg("workers") = 1, py::arg("symmetry_reduction") = false);
    m.def("verify", &verify_py, py::arg("q"));
    m.def("graph_census", &graph_census_py, py::arg("n"), py::arg("edge_disjoint_only") = false);
    m.def("sporadic_graph", &sporadic_py, py::arg("n"), py::arg("w2_prime") = -1);
    m.def("mantel", [](int n) { return json_to_py(mantel_to_json(mantel_oracle(n))); },
          py::arg("n"));
    m.def("hanson_toft",
          [](int n) { return json_to_py(hanson_toft_to_json(hanson_toft_oracle(n))); },
          py::arg("n"));
    m.def("main_lemma",
          [](int n) { return json_to_py(main_lemma_to_json(main_lemma_oracle(n))); },
          py::arg("n"));
}
