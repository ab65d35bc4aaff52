#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "kakeya/quadrics.hpp"

using namespace kakeya;

namespace {

QuadraticForm form4(std::vector<Fel> coef) { return QuadraticForm{4, std::move(coef)}; }

// X0 X1 + X2 X3.
QuadraticForm doubly_ruled(const Field&) {
    QuadraticForm q;
    q.dim = 4;
    q.coef.assign(10, 0);
    q.coef[std::size_t(QuadraticForm::index(4, 0, 1))] = 1;
    q.coef[std::size_t(QuadraticForm::index(4, 2, 3))] = 1;
    return q;
}

ProjLine frame_line_m(const Field& f) {
    return line_through(f, normalize_point(f, {1, 0, 0, 0}, 4),
                        normalize_point(f, {0, 0, 0, 1}, 4));
}

ProjLine frame_line_mp(const Field& f) {
    return line_through(f, normalize_point(f, {0, 1, 0, 0}, 4),
                        normalize_point(f, {1, 1, 1, 1}, 4));
}

// The quadric the frame construction must reproduce:
// X0 X1 + X2^2 - X1 X3 - X2 X3.
QuadraticForm frame_expected(const Field& f) {
    QuadraticForm q;
    q.dim = 4;
    q.coef.assign(10, 0);
    q.coef[std::size_t(QuadraticForm::index(4, 0, 1))] = 1;
    q.coef[std::size_t(QuadraticForm::index(4, 2, 2))] = 1;
    q.coef[std::size_t(QuadraticForm::index(4, 1, 3))] = f.neg(1);
    q.coef[std::size_t(QuadraticForm::index(4, 2, 3))] = f.neg(1);
    return normalize_form(f, q);
}

} // namespace

TEST_CASE("coefficient indexing") {
    CHECK(QuadraticForm::index(4, 0, 0) == 0);
    CHECK(QuadraticForm::index(4, 0, 3) == 3);
    CHECK(QuadraticForm::index(4, 1, 1) == 4);
    CHECK(QuadraticForm::index(4, 2, 3) == 8);
    CHECK(QuadraticForm::index(4, 3, 3) == 9);
    CHECK(QuadraticForm::index(3, 2, 2) == 5);
}

TEST_CASE("standard conic has q+1 points; the q=2 points are explicit") {
    Field f2 = make_field(2, 1);
    Conic c2 = standard_conic(f2);
    // Independent oracle: evaluate X0 X1 + X2^2 over all 7 points of the
    // plane.
    std::set<std::array<Fel, 4>> expect;
    for (const ProjPoint& p : enumerate_points(f2, 2)) {
        Fel v = f2.add(f2.mul(p.v[0], p.v[1]), f2.mul(p.v[2], p.v[2]));
        if (v == 0) expect.insert({p.v[0], p.v[1], p.v[2], 0});
    }
    CHECK(expect == std::set<std::array<Fel, 4>>{
                        {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 0}});
    std::set<std::array<Fel, 4>> got;
    for (const ProjPoint& p : c2.points) got.insert(p.v);
    CHECK(got == expect);

    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        auto [p, deg] = factor_prime_power(q);
        Field f(p, deg);
        CHECK(standard_conic(f).points.size() == q + 1);
    }
}

TEST_CASE("singular planar forms are rejected") {
    Field f = make_field(3, 1);
    // X0^2: a double line.
    QuadraticForm sq{3, {1, 0, 0, 0, 0, 0}};
    CHECK_THROWS_AS(conic_from_form(f, sq), StructureError);
    // X0 X1: two lines, q+1 points each.
    QuadraticForm pair{3, {0, 1, 0, 0, 0, 0}};
    CHECK_THROWS_AS(conic_from_form(f, pair), StructureError);
}

TEST_CASE("hyperbolic quadric point and line counts") {
    Field f2 = make_field(2, 1);
    CHECK(points_of(f2, doubly_ruled(f2)).size() == 9);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u}) {
        auto [p, deg] = factor_prime_power(q);
        Field f(p, deg);
        Geometry g(f);
        QuadraticForm dr = doubly_ruled(f);
        CHECK(points_of(f, dr).size() == (q + 1) * (q + 1));
        CHECK(lines_on(g, dr).size() == 2 * (q + 1));
    }
}

TEST_CASE("a quadric with no lines yields an empty line list") {
    // X0 X1 + X2^2 + X2 X3 + X3^2 over GF(2): an elliptic-type zero set.
    Field f = make_field(2, 1);
    QuadraticForm e = form4({0, 1, 0, 0, 0, 0, 0, 1, 1, 1});
    CHECK(points_of(f, e).size() == 5); // q^2 + 1
    Geometry g(f);
    CHECK(lines_on(g, e).empty());
}

TEST_CASE("regulus partition") {
    for (unsigned q : {2u, 3u, 4u}) {
        auto [p, deg] = factor_prime_power(q);
        Field f(p, deg);
        Geometry g(f);
        auto ls = lines_on(g, doubly_ruled(f));
        auto [r, rp] = partition_reguli(f, ls);
        CHECK(r.size() == q + 1);
        CHECK(rp.size() == q + 1);
        CHECK(r[0] == ls[0]);
        // Transversality: every cross pair meets, and the meet points are
        // exactly the quadric.
        std::set<std::array<Fel, 4>> meet_pts;
        for (const ProjLine& a : r)
            for (const ProjLine& b : rp) {
                auto x = meet(f, a, b);
                REQUIRE(x.has_value());
                meet_pts.insert(x->v);
            }
        CHECK(meet_pts.size() == (q + 1) * (q + 1));
        std::set<std::array<Fel, 4>> quad_pts;
        for (const ProjPoint& p2 : points_of(f, doubly_ruled(f))) quad_pts.insert(p2.v);
        CHECK(meet_pts == quad_pts);

        // Relabeling invariance: feeding a reordered list with a line of
        // the opposite regulus first swaps only the labels.
        std::vector<ProjLine> reordered{rp[0]};
        for (const ProjLine& l : ls)
            if (!(l == rp[0])) reordered.push_back(l);
        auto [r2, rp2] = partition_reguli(f, reordered);
        auto key = [](std::vector<ProjLine> v) {
            std::sort(v.begin(), v.end(), [](const ProjLine& a, const ProjLine& b) {
                return a.row < b.row;
            });
            return v;
        };
        CHECK(key(r2) == key(rp));
        CHECK(key(rp2) == key(r));
    }
}

TEST_CASE("regulus partition rejects a broken line family") {
    Field f = make_field(2, 1);
    Geometry g(f);
    QuadraticForm dr = doubly_ruled(f);
    auto ls = lines_on(g, dr);
    // Swap one quadric line for a line off the quadric: (0,0,1,0)-(0,0,0,1)
    // carries points with X2 X3 != 0.
    ProjLine alien = line_through(f, normalize_point(f, {0, 0, 1, 0}, 4),
                                  normalize_point(f, {0, 0, 0, 1}, 4));
    int on_count = 0;
    for (const ProjPoint& p : points_on(f, alien))
        if (dr.eval(f, p) == 0) ++on_count;
    REQUIRE(on_count < 3);
    ls[1] = alien;
    CHECK_THROWS_AS(partition_reguli(f, ls), StructureError);
}

TEST_CASE("standard quadric meets the infinite plane in the standard conic") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        auto [p, deg] = factor_prime_power(q);
        Field f(p, deg);
        Geometry g(f);
        HyperbolicQuadric h = standard_quadric(g);
        CHECK(h.points.size() == (q + 1) * (q + 1));
        CHECK(h.lines.size() == 2 * (q + 1));
        Conic c = standard_conic(f);
        std::set<std::array<Fel, 4>> inf, conic_pts;
        for (const ProjPoint& x : h.points)
            if (is_infinite(x)) inf.insert(x.v);
        for (const ProjPoint& x : c.points) conic_pts.insert(x.v);
        CHECK(inf == conic_pts);
    }
}

TEST_CASE("the frame example reproduces the expected quadric") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u}) {
        auto [p, deg] = factor_prime_power(q);
        Field f(p, deg);
        Geometry g(f);
        Conic c = standard_conic(f);
        QuadricSolve sol = solve_quadric_through(f, c, frame_line_m(f), frame_line_mp(f));
        CHECK(sol.nullspace_dim == 1);
        CHECK(sol.form == frame_expected(f));
        HyperbolicQuadric h = unique_quadric_through(g, c, frame_line_m(f), frame_line_mp(f));
        CHECK(h.form == frame_expected(f));
    }
}

TEST_CASE("unique_quadric_through rejects bad inputs") {
    Field f = make_field(3, 1);
    Geometry g(f);
    Conic c = standard_conic(f);
    ProjLine m = frame_line_m(f);
    // Meeting lines: both through (1,0,0,0).
    ProjLine m2 = line_through(f, normalize_point(f, {1, 0, 0, 0}, 4),
                               normalize_point(f, {1, 0, 0, 1}, 4));
    CHECK_THROWS_AS(unique_quadric_through(g, c, m, m2), InvalidArgument);
    // A line inside the plane at infinity.
    ProjLine inf_line = line_through(f, normalize_point(f, {1, 0, 0, 0}, 4),
                                     normalize_point(f, {0, 1, 0, 0}, 4));
    CHECK_THROWS_AS(unique_quadric_through(g, c, m, inf_line), InvalidArgument);
    // A line missing the conic: direction (0,0,1,0) is not on the conic.
    ProjLine off = line_through(f, normalize_point(f, {0, 0, 1, 0}, 4),
                                normalize_point(f, {0, 0, 0, 1}, 4));
    CHECK_THROWS_AS(unique_quadric_through(g, c, m, off), InvalidArgument);
    CHECK_THROWS_AS(unique_quadric_through(g, c, m, m), InvalidArgument);
}

TEST_CASE("every valid disjoint pair spans a one-dimensional solution space") {
    for (unsigned q : {2u, 3u}) {
        auto [p, deg] = factor_prime_power(q);
        Field f(p, deg);
        Geometry g(f);
        Conic c = standard_conic(f);
        // All lines meeting the conic, not at infinity.
        std::vector<ProjLine> cand;
        for (const ProjLine& l : g.lines()) {
            if (line_at_infinity(l)) continue;
            ProjPoint ip = infinite_point(f, l);
            if (std::find(c.points.begin(), c.points.end(), ip) != c.points.end())
                cand.push_back(l);
        }
        CHECK(cand.size() == (q + 1) * q * q);
        int pairs = 0;
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                if (infinite_point(f, cand[i]) == infinite_point(f, cand[j])) continue;
                if (meet(f, cand[i], cand[j]).has_value()) continue;
                ++pairs;
                QuadricSolve sol = solve_quadric_through(f, c, cand[i], cand[j]);
                CHECK(sol.nullspace_dim == 1);
                HyperbolicQuadric h = unique_quadric_through(g, c, cand[i], cand[j]);
                CHECK(h.points.size() == (q + 1) * (q + 1));
                CHECK(h.lines.size() == 2 * (q + 1));
                // The quadric contains the conic and both lines entirely,
                // and the two lines land in opposite reguli.
                for (const ProjPoint& x : c.points) CHECK(h.form.eval(f, x) == 0);
                for (const ProjLine* l : {&cand[i], &cand[j]})
                    for (const ProjPoint& x : points_on(f, *l))
                        CHECK(h.form.eval(f, x) == 0);
                bool i_in_r = std::find(h.regulus_r.begin(), h.regulus_r.end(), cand[i]) !=
                              h.regulus_r.end();
                bool j_in_r = std::find(h.regulus_r.begin(), h.regulus_r.end(), cand[j]) !=
                              h.regulus_r.end();
                CHECK(i_in_r == j_in_r); // disjoint lines share a regulus
            }
        CHECK(pairs > 0);
    }
}
