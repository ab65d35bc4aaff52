#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kakeya/classify.hpp"
#include "kakeya/json_io.hpp"

namespace {

using namespace kakeya;

constexpr int kExitVerified = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct FieldArgs {
    unsigned q = 0, p = 0, deg = 0;

    Field resolve() const {
        if (p && deg) return Field(p, deg);
        if (!q) throw InvalidArgument("pass --q, or --p with --deg");
        auto [fp, fdeg] = factor_prime_power(q);
        return Field(fp, fdeg);
    }
};

void add_field_options(CLI::App* cmd, FieldArgs& fa) {
    cmd->add_option("--q", fa.q, "field order (prime power)");
    cmd->add_option("--p", fa.p, "field characteristic");
    cmd->add_option("--deg", fa.deg, "extension degree");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_construct(const FieldArgs& fa, int k, const std::string& variant, int secant_index,
                  const std::string& out_path) {
    Field f = fa.resolve();
    Geometry geom(f);
    HyperbolicQuadric quad = standard_quadric(geom);
    int q = int(f.q());
    KakeyaLineSet ls = [&] {
        if (variant == "regulus-split") return construct_regulus_split(geom, k, quad);
        if (variant == "secant") {
            auto choices = enumerate_secant_choices(geom, k, quad);
            if (choices.empty()) throw InvalidArgument("no qualifying secant for this k");
            if (secant_index < 0 || secant_index >= int(choices.size()))
                throw InvalidArgument("secant index out of range (have " +
                                      std::to_string(choices.size()) + " choices)");
            return construct_secant_variant(geom, k, quad,
                                            choices[std::size_t(secant_index)].line);
        }
        throw InvalidArgument("variant must be regulus-split or secant");
    }();
    int size = kakeya_points(ls).size;
    int predicted = variant == "regulus-split" ? k * q + (q + 1 - k) * (q - k)
                                               : k * q + (q - k) * (q - k) + (q - 1);
    std::cout << "q=" << q << " k=" << k << " variant=" << variant << "\n"
              << "covered points: " << size << "\n"
              << "closed form:    " << predicted << "\n";
    if (!out_path.empty()) {
        write_file(out_path, canonical_dump(line_set_to_json(ls)));
        std::cout << "line set written to " << out_path << "\n";
    }
    return size == predicted ? kExitVerified : kExitCounterexample;
}

int cmd_classify(const FieldArgs& fa, std::optional<int> threshold, int workers, bool symmetry,
                 const std::string& out_path) {
    Field f = fa.resolve();
    SearchConfig config{f.q(), threshold, symmetry, workers};
    auto t0 = std::chrono::steady_clock::now();
    ClassificationReport rep = enumerate_all(config);
    double secs = seconds_since(t0);
    std::cout << "q=" << config.q << " sets=" << rep.sets_enumerated
              << " nodes=" << rep.nodes_visited << " pruned=" << rep.pruned_branches << "\n";
    std::cout << "size histogram:";
    for (const auto& [size, count] : rep.size_histogram())
        std::cout << " " << size << ":" << count;
    std::cout << "\nminimum size: " << rep.min_size() << " (gamma = " << gamma(config.q)
              << ")\n";
    std::cout << "wall time: " << secs << " s\n";
    if (!out_path.empty()) {
        write_file(out_path, canonical_dump(report_to_json(rep)));
        std::cout << "report written to " << out_path << "\n";
    }
    return kExitVerified;
}

int cmd_verify(const FieldArgs& fa, bool all, const std::string& out_path) {
    std::vector<unsigned> qs;
    if (all) {
        qs = {2, 3, 4};
    } else {
        Field f = fa.resolve();
        qs = {f.q()};
    }
    json bundle;
    bool ok = true;
    for (unsigned q : qs) {
        if (q > 4) throw BudgetExceeded("verify supports q = 2, 3, 4");
        auto t0 = std::chrono::steady_clock::now();
        ClassificationReport rep = enumerate_all(SearchConfig{q, std::nullopt, false, 1});
        VerifyResult theorem = verify_theorem(rep);
        VerifyResult remark = verify_remark_census(rep);
        VerifyResult pentagon = verify_pentagon_excluded(rep);
        json entry;
        entry["theorem"] = theorem.certificate;
        entry["remark_census"] = remark.certificate;
        entry["pentagon"] = pentagon.certificate;
        bundle["q" + std::to_string(q)] = std::move(entry);
        bool q_ok = theorem.verified && remark.verified && pentagon.verified;
        ok = ok && q_ok;
        std::cout << "q=" << q << " theorem=" << (theorem.verified ? "ok" : "FAIL")
                  << " remark-census=" << (remark.verified ? "ok" : "FAIL")
                  << " pentagon=" << (pentagon.verified ? "ok" : "FAIL") << " ("
                  << seconds_since(t0) << " s)\n";
    }
    json oracles;
    for (int n = 2; n <= 7; ++n) {
        json entry;
        MantelReport mr = mantel_oracle(n);
        entry["mantel"] = mantel_to_json(mr);
        bool n_ok = mr.holds();
        if (n >= 4) {
            HansonToftReport hr = hanson_toft_oracle(n);
            MainLemmaReport lr = main_lemma_oracle(n);
            entry["hanson_toft"] = hanson_toft_to_json(hr);
            entry["main_lemma"] = main_lemma_to_json(lr);
            n_ok = n_ok && hr.holds() && lr.holds();
        }
        oracles["n" + std::to_string(n)] = std::move(entry);
        ok = ok && n_ok;
        std::cout << "graph oracles n=" << n << ": " << (n_ok ? "ok" : "FAIL") << "\n";
    }
    bundle["graph_oracles"] = std::move(oracles);
    bundle["verified"] = ok;
    bundle["wall_time_ms"] = 0;
    if (!out_path.empty()) {
        write_file(out_path, canonical_dump(bundle));
        std::cout << "certificate bundle written to " << out_path << "\n";
    }
    return ok ? kExitVerified : kExitCounterexample;
}

int cmd_graphs(int n, const std::string& filter, const std::string& out_path) {
    GraphFilter gf = GraphFilter::All;
    if (filter == "edge-disjoint")
        gf = GraphFilter::EdgeDisjointCliques;
    else if (!filter.empty() && filter != "all")
        throw InvalidArgument("filter must be 'all' or 'edge-disjoint'");
    auto graphs = enumerate_graphs(n, gf);
    std::map<int, int> c_dist;
    for (const CliqueGraph& g : graphs) ++c_dist[c_value(g)];
    std::cout << "n=" << n << " types=" << graphs.size() << "\nC distribution:";
    for (const auto& [c, count] : c_dist) std::cout << " " << c << ":" << count;
    std::cout << "\n";
    if (!out_path.empty()) {
        write_file(out_path, graph_census_csv(graphs));
        std::cout << "census written to " << out_path << "\n";
    }
    return kExitVerified;
}

int cmd_recognize(const std::string& in_path, const std::string& out_path) {
    std::ifstream in(in_path);
    if (!in) throw InvalidArgument("cannot open " + in_path);
    json j = json::parse(in);
    KakeyaLineSet ls = line_set_from_json(j);
    Geometry geom(ls.field);
    ConstructionLabel label = recognize(geom, ls);
    std::cout << "variant: " << variant_name(label.variant) << "\n";
    if (label.variant != Variant::Other) {
        std::cout << "k: " << label.k << " (split " << std::min(label.side_r, label.side_rp)
                  << "+" << std::max(label.side_r, label.side_rp) << ")\n";
        if (label.variant == Variant::SecantVariant)
            std::cout << "secant through conic point " << label.secant_index
                      << ", second point " << secant_detail_name(label.detail) << "\n";
    }
    std::cout << "covered points: " << kakeya_points(ls).size << "\n";
    if (!out_path.empty()) {
        write_file(out_path, canonical_dump(label_to_json(label)));
        std::cout << "label written to " << out_path << "\n";
    }
    return kExitVerified;
}

int cmd_field_table(const FieldArgs& fa, const std::string& out_path) {
    Field f = fa.resolve();
    std::cout << "GF(" << f.q() << ") = GF(" << f.p() << "^" << f.deg() << ")\nmodulus:";
    for (Fel c : f.modulus()) std::cout << " " << c;
    std::cout << "  (constant term first)\n";
    if (f.q() <= 16) {
        std::cout << "mul table:\n";
        for (Fel a : f.elements()) {
            for (Fel b : f.elements()) std::cout << int(f.mul(a, b)) << (b + 1u < f.q() ? " " : "");
            std::cout << "\n";
        }
    }
    if (!out_path.empty()) {
        json j;
        j["p"] = f.p();
        j["deg"] = f.deg();
        j["q"] = f.q();
        json mod = json::array();
        for (Fel c : f.modulus()) mod.push_back(int(c));
        j["modulus"] = std::move(mod);
        json add = json::array(), mul = json::array();
        for (Fel a : f.elements()) {
            json ra = json::array(), rm = json::array();
            for (Fel b : f.elements()) {
                ra.push_back(int(f.add(a, b)));
                rm.push_back(int(f.mul(a, b)));
            }
            add.push_back(std::move(ra));
            mul.push_back(std::move(rm));
        }
        j["add"] = std::move(add);
        j["mul"] = std::move(mul);
        write_file(out_path, canonical_dump(j));
        std::cout << "tables written to " << out_path << "\n";
    }
    return kExitVerified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kakeya line sets in the linear representation of a conic: "
                 "constructions, exhaustive classification and graph censuses"};
    app.require_subcommand(1);

    FieldArgs fa;
    int k = 0, secant_index = 0, workers = 1, n = 5;
    std::string variant = "regulus-split", out_path, in_path, filter = "all";
    std::optional<int> threshold;
    bool all = false, symmetry = false;

    auto* construct = app.add_subcommand("construct", "build a line set and write it as JSON");
    add_field_options(construct, fa);
    construct->add_option("--k", k, "split parameter")->required();
    construct->add_option("--variant", variant, "regulus-split | secant");
    construct->add_option("--secant-index", secant_index, "which qualifying secant to use");
    construct->add_option("--out", out_path, "output file");

    auto* classify = app.add_subcommand("classify", "enumerate all line sets and report a census");
    add_field_options(classify, fa);
    int threshold_arg = -1;
    classify->add_option("--threshold", threshold_arg,
                         "count only sets covering fewer points than this");
    classify->add_option("--workers", workers, "worker threads");
    classify->add_flag("--symmetry-reduction", symmetry,
                       "fix the first line to a translation-orbit representative");
    classify->add_option("--out", out_path, "report file");

    auto* verify = app.add_subcommand("verify",
                                      "check the classification statements and graph censuses");
    add_field_options(verify, fa);
    verify->add_flag("--all", all, "verify q = 2, 3 and 4");
    verify->add_option("--out", out_path, "certificate bundle file");

    auto* graphs = app.add_subcommand("graphs", "isomorph-free census of small graphs");
    graphs->add_option("--n", n, "vertex count")->required();
    graphs->add_option("--filter", filter, "all | edge-disjoint");
    graphs->add_option("--out", out_path, "census CSV file");

    auto* recog = app.add_subcommand("recognize", "classify a line-set JSON file");
    recog->add_option("--in", in_path, "line-set file")->required();
    recog->add_option("--out", out_path, "label JSON file");

    auto* ftable = app.add_subcommand("field-table", "print finite field tables");
    add_field_options(ftable, fa);
    ftable->add_option("--out", out_path, "table JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (construct->parsed())
            return cmd_construct(fa, k, variant, secant_index, out_path);
        if (classify->parsed()) {
            if (threshold_arg >= 0) threshold = threshold_arg;
            return cmd_classify(fa, threshold, workers, symmetry, out_path);
        }
        if (verify->parsed()) return cmd_verify(fa, all, out_path);
        if (graphs->parsed()) return cmd_graphs(n, filter, out_path);
        if (recog->parsed()) return cmd_recognize(in_path, out_path);
        if (ftable->parsed()) return cmd_field_table(fa, out_path);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
