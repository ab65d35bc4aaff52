#include "kakeya/quadrics.hpp"

#include <algorithm>

namespace kakeya {

int QuadraticForm::index(int dim, int i, int j) {
    // Row-major upper triangle: entry (i,j), i <= j.
    int idx = 0;
    for (int r = 0; r < i; ++r) idx += dim - r;
    return idx + (j - i);
}

Fel QuadraticForm::eval(const Field& f, const ProjPoint& p) const {
    Fel s = 0;
    int k = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j, ++k)
            s = f.add(s, f.mul(coef[std::size_t(k)],
                               f.mul(p.v[std::size_t(i)], p.v[std::size_t(j)])));
    return s;
}

QuadraticForm normalize_form(const Field& f, QuadraticForm q) {
    for (Fel c : q.coef) {
        if (c == 0) continue;
        Fel s = f.inv(c);
        for (Fel& x : q.coef) x = f.mul(x, s);
        return q;
    }
    throw InvalidArgument("zero form");
}

Conic standard_conic(const Field& f) {
    QuadraticForm form;
    form.dim = 3;
    form.coef.assign(6, 0);
    form.coef[std::size_t(QuadraticForm::index(3, 0, 1))] = 1;
    form.coef[std::size_t(QuadraticForm::index(3, 2, 2))] = 1;
    return conic_from_form(f, form);
}

std::vector<ProjPoint> points_of(const Field& f, const QuadraticForm& q) {
    std::vector<ProjPoint> out;
    for (const ProjPoint& p : enumerate_points(f, q.dim - 1))
        if (q.eval(f, p) == 0) out.push_back(p);
    return out;
}

namespace {

ProjPoint embed_in_infinity(const ProjPoint& planar) {
    ProjPoint p;
    p.ncoords = 4;
    p.v = {planar.v[0], planar.v[1], planar.v[2], 0};
    return p;
}

} // namespace

Conic conic_from_form(const Field& f, QuadraticForm form) {
    if (form.dim != 3 || form.coef.size() != 6) throw InvalidArgument("conic form must have dim 3");
    Conic c;
    c.form = normalize_form(f, std::move(form));
    auto planar = points_of(f, c.form);
    if (planar.size() != f.q() + 1)
        throw StructureError("conic is singular: point count is not q+1");
    // No line of the plane inside the zero set. Planar lines are identified
    // with their dual coordinate vectors.
    auto all_points = enumerate_points(f, 2);
    for (const ProjPoint& dual : all_points) {
        bool line_in_zero_set = true;
        for (const ProjPoint& lp : all_points) {
            Fel s = 0;
            for (int j = 0; j < 3; ++j)
                s = f.add(s, f.mul(dual.v[std::size_t(j)], lp.v[std::size_t(j)]));
            if (s != 0) continue; // lp not on the line
            if (c.form.eval(f, lp) != 0) {
                line_in_zero_set = false;
                break;
            }
        }
        if (line_in_zero_set) throw StructureError("conic is singular: contains a line");
    }
    c.points.reserve(planar.size());
    for (const ProjPoint& p : planar) c.points.push_back(embed_in_infinity(p));
    return c;
}

std::vector<ProjLine> lines_on(Geometry& g, const QuadraticForm& q) {
    if (q.dim != 4) throw InvalidArgument("lines_on requires a dim-4 form");
    const Field& f = g.field();
    std::vector<ProjLine> out;
    const auto& pts = g.points();
    const auto& lp = g.line_points();
    // Zero-set membership per point index, then per-line containment.
    std::vector<char> zero(pts.size(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) zero[i] = q.eval(f, pts[i]) == 0;
    for (std::size_t li = 0; li < g.lines().size(); ++li) {
        bool on = true;
        for (int pi : lp[li])
            if (!zero[std::size_t(pi)]) {
                on = false;
                break;
            }
        if (on) out.push_back(g.lines()[li]);
    }
    return out;
}

std::pair<std::vector<ProjLine>, std::vector<ProjLine>> partition_reguli(
    const Field& f, const std::vector<ProjLine>& lines) {
    if (lines.empty() || lines.size() % 2 != 0)
        throw StructureError("regulus partition requires 2(q+1) lines");
    std::size_t half = lines.size() / 2;
    std::vector<ProjLine> r, rp;
    r.push_back(lines[0]);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (meet(f, lines[0], lines[i]).has_value())
            rp.push_back(lines[i]);
        else
            r.push_back(lines[i]);
    }
    if (r.size() != half || rp.size() != half)
        throw StructureError("line meet graph is not complete bipartite");
    auto pairwise_skew = [&](const std::vector<ProjLine>& part) {
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (meet(f, part[i], part[j]).has_value()) return false;
        return true;
    };
    if (!pairwise_skew(r) || !pairwise_skew(rp))
        throw StructureError("line meet graph is not complete bipartite");
    for (const ProjLine& a : r)
        for (const ProjLine& b : rp)
            if (!meet(f, a, b).has_value())
                throw StructureError("line meet graph is not complete bipartite");
    return {std::move(r), std::move(rp)};
}

HyperbolicQuadric make_hyperbolic(Geometry& g, QuadraticForm form) {
    const Field& f = g.field();
    HyperbolicQuadric h;
    h.form = normalize_form(f, std::move(form));
    h.points = points_of(f, h.form);
    unsigned q = f.q();
    if (h.points.size() != std::size_t(q + 1) * (q + 1))
        throw StructureError("quadric does not have (q+1)^2 points");
    h.lines = lines_on(g, h.form);
    if (h.lines.size() != 2 * std::size_t(q + 1))
        throw StructureError("quadric does not have 2(q+1) lines");
    auto parts = partition_reguli(f, h.lines);
    h.regulus_r = std::move(parts.first);
    h.regulus_rp = std::move(parts.second);
    return h;
}

HyperbolicQuadric standard_quadric(Geometry& g) {
    const Field& f = g.field();
    QuadraticForm form;
    form.dim = 4;
    form.coef.assign(10, 0);
    form.coef[std::size_t(QuadraticForm::index(4, 0, 1))] = 1;
    form.coef[std::size_t(QuadraticForm::index(4, 2, 2))] = 1;
    form.coef[std::size_t(QuadraticForm::index(4, 1, 3))] = f.neg(1);
    form.coef[std::size_t(QuadraticForm::index(4, 2, 3))] = f.neg(1);
    return make_hyperbolic(g, form);
}

QuadraticForm lift_planar_form(const QuadraticForm& planar) {
    if (planar.dim != 3) throw InvalidArgument("lift requires a dim-3 form");
    QuadraticForm q;
    q.dim = 4;
    q.coef.assign(10, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            q.coef[std::size_t(QuadraticForm::index(4, i, j))] =
                planar.coef[std::size_t(QuadraticForm::index(3, i, j))];
    return q;
}

QuadraticForm restrict_to_infinity(const QuadraticForm& form) {
    if (form.dim != 4) throw InvalidArgument("restriction requires a dim-4 form");
    QuadraticForm q;
    q.dim = 3;
    q.coef.assign(6, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            q.coef[std::size_t(QuadraticForm::index(3, i, j))] =
                form.coef[std::size_t(QuadraticForm::index(4, i, j))];
    return q;
}

QuadricSolve solve_quadric_through(const Field& f, const Conic& c, const ProjLine& m,
                                   const ProjLine& mp) {
    // Unknowns (lambda, a0, a1, a2, a3); one row per line point x:
    //   lambda * C(x0,x1,x2) + x3 (a0 x0 + a1 x1 + a2 x2 + a3 x3) = 0.
    // Rows for points with x3 = 0 are trivially zero since those points lie
    // on the conic; they are kept for uniform handling.
    std::vector<std::array<Fel, 5>> rows;
    for (const ProjLine* line : {&m, &mp}) {
        for (const ProjPoint& x : points_on(f, *line)) {
            std::array<Fel, 5> row{};
            ProjPoint planar;
            planar.ncoords = 3;
            planar.v = {x.v[0], x.v[1], x.v[2], 0};
            bool planar_zero = x.v[0] == 0 && x.v[1] == 0 && x.v[2] == 0;
            row[0] = planar_zero ? Fel(0) : c.form.eval(f, planar);
            for (int i = 0; i < 4; ++i) row[std::size_t(1 + i)] = f.mul(x.v[3], x.v[std::size_t(i)]);
            rows.push_back(row);
        }
    }
    Mat sys(int(rows.size()), 5);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int j = 0; j < 5; ++j) sys.at(int(r), j) = rows[r][std::size_t(j)];
    auto ns = nullspace(f, sys);
    QuadricSolve out;
    out.nullspace_dim = int(ns.size());
    if (out.nullspace_dim == 1) {
        const auto& v = ns.front(); // (lambda, a0..a3)
        QuadraticForm form = lift_planar_form(c.form);
        for (Fel& x : form.coef) x = f.mul(x, v[0]);
        for (int i = 0; i < 3; ++i)
            form.coef[std::size_t(QuadraticForm::index(4, i, 3))] = v[std::size_t(1 + i)];
        form.coef[std::size_t(QuadraticForm::index(4, 3, 3))] = v[4];
        out.form = normalize_form(f, std::move(form));
    }
    return out;
}

HyperbolicQuadric unique_quadric_through(Geometry& g, const Conic& c, const ProjLine& m,
                                         const ProjLine& mp) {
    const Field& f = g.field();
    if (m == mp) throw InvalidArgument("the two lines must be distinct");
    if (line_at_infinity(m) || line_at_infinity(mp))
        throw InvalidArgument("lines must not lie in the plane at infinity");
    if (meet(f, m, mp).has_value()) throw InvalidArgument("the two lines must be disjoint");
    auto on_conic = [&](const ProjLine& l) {
        ProjPoint inf = infinite_point(f, l);
        return std::find(c.points.begin(), c.points.end(), inf) != c.points.end();
    };
    if (!on_conic(m) || !on_conic(mp)) throw InvalidArgument("each line must meet the conic");
    QuadricSolve sol = solve_quadric_through(f, c, m, mp);
    if (sol.nullspace_dim != 1)
        throw StructureError("quadric solution space has dimension " +
                             std::to_string(sol.nullspace_dim));
    HyperbolicQuadric h = make_hyperbolic(g, sol.form);
    // The quadric meets the plane at infinity exactly in the conic.
    std::size_t infinite_count = 0;
    for (const ProjPoint& p : h.points)
        if (is_infinite(p)) {
            if (std::find(c.points.begin(), c.points.end(), p) == c.points.end())
                throw StructureError("quadric meets the infinite plane outside the conic");
            ++infinite_count;
        }
    if (infinite_count != c.points.size())
        throw StructureError("quadric section at infinity is not the conic");
    return h;
}

} // namespace kakeya
