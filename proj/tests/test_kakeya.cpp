#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "kakeya/kakeya.hpp"

using namespace kakeya;

namespace {

struct Setup {
    Field field;
    Geometry geom;
    HyperbolicQuadric quad;

    explicit Setup(unsigned q)
        : field(factor_prime_power(q).first, factor_prime_power(q).second),
          geom(field),
          quad(standard_quadric(geom)) {}
};

int split_size_formula(int q, int k) { return k * q + (q + 1 - k) * (q - k); }
int secant_size_formula(int q, int k) { return k * q + (q - k) * (q - k) + (q - 1); }

// All candidate lines through each conic point, for random sampling.
std::vector<std::vector<ProjLine>> candidates_by_conic_point(Geometry& g, const Conic& c) {
    const Field& f = g.field();
    std::vector<std::vector<ProjLine>> out(c.points.size());
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        int pi = g.point_index(c.points[i]);
        for (int li : g.lines_through_point()[std::size_t(pi)]) {
            const ProjLine& l = g.lines()[std::size_t(li)];
            if (!line_at_infinity(l)) out[i].push_back(l);
        }
    }
    return out;
}

} // namespace

TEST_CASE("gamma formula") {
    CHECK(kakeya::gamma(2) == 4);
    CHECK(kakeya::gamma(3) == 8);
    CHECK(kakeya::gamma(4) == 14);
    CHECK(kakeya::gamma(5) == 21);
    CHECK(kakeya::gamma(7) == 40);
    CHECK(kakeya::gamma(8) == 52);
    CHECK(kakeya::gamma(9) == 65);
}

TEST_CASE("line set validation") {
    Setup s(3);
    KakeyaLineSet ls = construct_regulus_split(s.geom, 2, s.quad);
    CHECK(ls.lines.size() == 4);
    // Dropping a line fails.
    auto shorter = ls.lines;
    shorter.pop_back();
    CHECK_THROWS_AS(make_line_set(ls.field, ls.conic, shorter), InvalidArgument);
    // Swapping two lines breaks the conic-point indexing.
    auto swapped = ls.lines;
    std::swap(swapped[0], swapped[1]);
    CHECK_THROWS_AS(make_line_set(ls.field, ls.conic, swapped), InvalidArgument);
}

TEST_CASE("construction preconditions") {
    Setup s(3);
    CHECK_THROWS_AS(construct_regulus_split(s.geom, -1, s.quad), InvalidArgument);
    CHECK_THROWS_AS(construct_regulus_split(s.geom, 5, s.quad), InvalidArgument);
    CHECK_THROWS_AS(enumerate_secant_choices(s.geom, 4, s.quad), InvalidArgument);
    // A quadric whose infinite section is a line pair is not through a
    // conic: X0 X1 + X2 X3 restricts to X0 X1.
    QuadraticForm dr;
    dr.dim = 4;
    dr.coef.assign(10, 0);
    dr.coef[std::size_t(QuadraticForm::index(4, 0, 1))] = 1;
    dr.coef[std::size_t(QuadraticForm::index(4, 2, 3))] = 1;
    HyperbolicQuadric off_conic = make_hyperbolic(s.geom, dr);
    CHECK_THROWS_AS(construct_regulus_split(s.geom, 1, off_conic), StructureError);
}

TEST_CASE("regulus split sizes match the closed form and the direct count") {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        Setup s(q);
        for (int k = 0; k <= int(q) + 1; ++k) {
            KakeyaLineSet ls = construct_regulus_split(s.geom, k, s.quad);
            int size = kakeya_points(ls).size;
            CHECK(size == split_size_formula(int(q), k));
            CHECK(size_via_cliques(ls) == size);
            // The intersection graph is complete bipartite K_{k,q+1-k}.
            CliqueGraph g = build_gamma(ls);
            std::vector<std::pair<int, int>> e;
            for (int i = 0; i < k; ++i)
                for (int j = k; j <= int(q); ++j) e.emplace_back(i, j);
            CHECK(isomorphic(g, graph_from_edges(int(q) + 1, e)));
        }
    }
}

TEST_CASE("parabola identity for odd q") {
    for (int q : {3, 5, 7, 9}) {
        for (int k = 0; k <= q + 1; ++k) {
            // 4(kq + (q+1-k)(q-k)) = 3q^2 + 2q - 1 + ((q+1) - 2k)^2
            int lhs = 4 * split_size_formula(q, k);
            int rhs = 3 * q * q + 2 * q - 1 + (q + 1 - 2 * k) * (q + 1 - 2 * k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("minimum over k realizes gamma") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        int best = INT_MAX, best_k = -1;
        for (int k = 0; k <= int(q) + 1; ++k) {
            int s = split_size_formula(int(q), k);
            if (s < best) {
                best = s;
                best_k = k;
            }
        }
        CHECK(best == kakeya::gamma(q));
        int expected_k = q % 2 ? int(q + 1) / 2 : int(q) / 2;
        CHECK(split_size_formula(int(q), expected_k) == best);
        CHECK((best_k == expected_k || split_size_formula(int(q), best_k) ==
                                           split_size_formula(int(q), expected_k)));
    }
}

TEST_CASE("secant choices and sizes") {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        Setup s(q);
        for (int k = 0; k <= int(q); ++k) {
            auto choices = enumerate_secant_choices(s.geom, k, s.quad);
            CHECK(!choices.empty());
            for (const SecantChoice& ch : choices) {
                if (k == 0) CHECK(ch.detail == SecantDetail::OnRPrimeLine);
                KakeyaLineSet ls = construct_secant_variant(s.geom, k, s.quad, ch.line);
                int size = kakeya_points(ls).size;
                CHECK(size == secant_size_formula(int(q), k));
                CHECK(size_via_cliques(ls) == size);
            }
            // The three second-point classes partition the choices. The
            // second point is a generator meet l_i x l'_j with i != j, so
            // an on-R-only hit needs two chosen first-regulus lines and an
            // on-R'-only hit two chosen opposite ones.
            std::set<SecantDetail> seen;
            for (const SecantChoice& ch : choices) seen.insert(ch.detail);
            CHECK(seen.count(SecantDetail::OnRLine) == (k >= 2 ? 1 : 0));
            CHECK(seen.count(SecantDetail::OnRPrimeLine) == (k <= int(q) - 2 ? 1 : 0));
            CHECK(seen.count(SecantDetail::OnBoth) == (k >= 1 && k <= int(q) - 1 ? 1 : 0));
            CHECK(!seen.count(SecantDetail::None));
        }
    }
}

TEST_CASE("the q=2 cone arises as a secant choice through a generator meet") {
    Setup s(2);
    auto choices = enumerate_secant_choices(s.geom, 1, s.quad);
    bool cone_found = false;
    for (const SecantChoice& ch : choices) {
        if (ch.detail != SecantDetail::OnBoth) continue;
        KakeyaLineSet ls = construct_secant_variant(s.geom, 1, s.quad, ch.line);
        // All three lines through one affine point.
        CliqueGraph g = build_gamma(ls);
        if (g.edge_count() == 3) {
            cone_found = true;
            CHECK(kakeya_points(ls).size == 4);
        }
    }
    CHECK(cone_found);
}

TEST_CASE("secant construction rejects non-qualifying lines") {
    Setup s(3);
    const Field& f = s.field;
    Conic c = standard_conic(f);
    const ProjPoint& last = c.points.back();
    // A generator through the last conic point is not a secant.
    for (const ProjLine& l : s.quad.lines)
        if (infinite_point(f, l) == last)
            CHECK_THROWS_AS(construct_secant_variant(s.geom, 1, s.quad, l), InvalidArgument);
    // A tangent line misses the second intersection point.
    int rejected = 0;
    int pi = s.geom.point_index(last);
    for (int li : s.geom.lines_through_point()[std::size_t(pi)]) {
        const ProjLine& l = s.geom.lines()[std::size_t(li)];
        if (line_at_infinity(l)) continue;
        int hits = 0;
        for (const ProjPoint& x : points_on(f, l))
            if (s.quad.form.eval(f, x) == 0) ++hits;
        if (hits == 1) {
            CHECK_THROWS_AS(construct_secant_variant(s.geom, 1, s.quad, l), InvalidArgument);
            ++rejected;
        }
    }
    CHECK(rejected > 0);
}

TEST_CASE("coverage identity, exhaustive for q=2") {
    Setup s(2);
    Conic c = standard_conic(s.field);
    auto cands = candidates_by_conic_point(s.geom, c);
    REQUIRE(cands.size() == 3);
    for (const auto& per_point : cands) REQUIRE(per_point.size() == 4);
    int total = 0;
    for (const ProjLine& l0 : cands[0])
        for (const ProjLine& l1 : cands[1])
            for (const ProjLine& l2 : cands[2]) {
                KakeyaLineSet ls = make_line_set(s.field, c, {l0, l1, l2});
                ++total;
                CHECK(kakeya_points(ls).size == size_via_cliques(ls));
                CHECK(edge_disjoint(build_gamma(ls)));
            }
    CHECK(total == 64);
}

TEST_CASE("coverage identity, sampled for q=3") {
    Setup s(3);
    Conic c = standard_conic(s.field);
    auto cands = candidates_by_conic_point(s.geom, c);
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<ProjLine> lines;
        for (const auto& per_point : cands)
            lines.push_back(per_point[rng() % per_point.size()]);
        KakeyaLineSet ls = make_line_set(s.field, c, std::move(lines));
        CHECK(kakeya_points(ls).size == size_via_cliques(ls));
        CHECK(edge_disjoint(build_gamma(ls)));
    }
}

TEST_CASE("recognition round trips") {
    for (unsigned q : {2u, 3u, 4u}) {
        Setup s(q);
        for (int k = 0; k <= int(q) + 1; ++k) {
            KakeyaLineSet ls = construct_regulus_split(s.geom, k, s.quad);
            ConstructionLabel label = recognize(s.geom, ls);
            CHECK(label.variant == Variant::RegulusSplit);
            CHECK(label.k == std::min(k, int(q) + 1 - k));
            KakeyaLineSet rebuilt = rebuild_from_label(s.geom, ls.conic, label);
            CHECK(rebuilt.lines == ls.lines);
        }
        for (int k = 0; k <= int(q); ++k) {
            auto choices = enumerate_secant_choices(s.geom, k, s.quad);
            for (std::size_t ci = 0; ci < choices.size(); ci += 3) {
                KakeyaLineSet ls = construct_secant_variant(s.geom, k, s.quad, choices[ci].line);
                ConstructionLabel label = recognize(s.geom, ls);
                if (label.variant == Variant::RegulusSplit) {
                    // A secant landing on the quadric pattern of another
                    // split is legitimately the stronger description.
                    KakeyaLineSet rebuilt = rebuild_from_label(s.geom, ls.conic, label);
                    CHECK(rebuilt.lines == ls.lines);
                    continue;
                }
                CHECK(label.variant == Variant::SecantVariant);
                KakeyaLineSet rebuilt = rebuild_from_label(s.geom, ls.conic, label);
                CHECK(rebuilt.lines == ls.lines);
            }
        }
    }
}

TEST_CASE("random sets: any recognized witness regenerates the input") {
    for (unsigned q : {3u, 4u}) {
        Setup s(q);
        Conic c = standard_conic(s.field);
        auto cands = candidates_by_conic_point(s.geom, c);
        std::mt19937 rng(900 + q);
        int witnessed = 0;
        for (int trial = 0; trial < 150; ++trial) {
            std::vector<ProjLine> lines;
            for (const auto& per_point : cands)
                lines.push_back(per_point[rng() % per_point.size()]);
            KakeyaLineSet ls = make_line_set(s.field, c, std::move(lines));
            ConstructionLabel label = recognize(s.geom, ls);
            if (label.variant == Variant::Other) continue;
            ++witnessed;
            KakeyaLineSet rebuilt = rebuild_from_label(s.geom, ls.conic, label);
            CHECK(rebuilt.lines == ls.lines);
        }
        // With these seeds the run sees 67 (q=3) resp. 6 (q=4) witnesses.
        CHECK(witnessed > 0);
    }
}

TEST_CASE("a two-meeting-plus-one-skew set is a k=0 secant description") {
    // Graph: one edge and an isolated vertex (q = 2).
    Setup s(2);
    Conic c = standard_conic(s.field);
    auto choices = enumerate_secant_choices(s.geom, 0, s.quad);
    REQUIRE(!choices.empty());
    KakeyaLineSet ls = construct_secant_variant(s.geom, 0, s.quad, choices[0].line);
    CliqueGraph g = build_gamma(ls);
    CHECK(g.edge_count() == 1);
    ConstructionLabel label = recognize(s.geom, ls);
    CHECK(label.variant == Variant::SecantVariant);
    CHECK(label.k == 0);
}

TEST_CASE("cones of concurrent lines") {
    // q = 2: the cone is recognized through the meeting-pair fallback.
    {
        Setup s(2);
        Conic c = standard_conic(s.field);
        auto cands = candidates_by_conic_point(s.geom, c);
        // Build the cone over an affine apex.
        ProjPoint apex = normalize_point(s.field, {0, 0, 0, 1}, 4);
        std::vector<ProjLine> lines;
        for (const ProjPoint& cp : c.points) lines.push_back(line_through(s.field, cp, apex));
        KakeyaLineSet cone = make_line_set(s.field, c, std::move(lines));
        CHECK(kakeya_points(cone).size == 4);
        ConstructionLabel label = recognize(s.geom, cone);
        CHECK(label.variant == Variant::SecantVariant);
        CHECK(label.k == 1);
    }
    // q = 3: a quadric carries at most two generators through a point, so
    // the four-line cone admits no witness at all.
    {
        Setup s(3);
        Conic c = standard_conic(s.field);
        ProjPoint apex = normalize_point(s.field, {0, 0, 0, 1}, 4);
        std::vector<ProjLine> lines;
        for (const ProjPoint& cp : c.points) lines.push_back(line_through(s.field, cp, apex));
        KakeyaLineSet cone = make_line_set(s.field, c, std::move(lines));
        CHECK(kakeya_points(cone).size == 9);
        CHECK(recognize(s.geom, cone).variant == Variant::Other);
        // Concurrent lines give the complete graph: one maximal clique.
        CliqueGraph g = build_gamma(cone);
        CHECK(g.max_cliques.size() == 1);
        CHECK(c_value(g) == 3);
    }
}

TEST_CASE("hyperbolic pencil count is q^3(q-1)/2") {
    // Disjoint candidate pairs number C(q+1,2) q^3 (q-1); each quadric
    // carries 2 C(q+1,2) same-regulus pairs and each disjoint pair lies on
    // exactly one quadric, so the pencil holds q^3 (q-1)/2 hyperbolics.
    for (unsigned q : {2u, 3u, 4u}) {
        Setup s(q);
        Conic c = standard_conic(s.field);
        CHECK(pencil_hyperbolics(s.geom, c).size() == q * q * q * (q - 1) / 2);
    }
}

TEST_CASE("a secant through a generator meet realizes the sharpness graph") {
    Setup s(4);
    auto choices = enumerate_secant_choices(s.geom, 2, s.quad);
    bool found = false;
    for (const SecantChoice& ch : choices) {
        if (ch.detail != SecantDetail::OnBoth) continue;
        found = true;
        KakeyaLineSet ls = construct_secant_variant(s.geom, 2, s.quad, ch.line);
        CHECK(isomorphic(build_gamma(ls), sporadic_graph(5)));
    }
    CHECK(found);
}
