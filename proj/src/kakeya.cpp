#include "kakeya/kakeya.hpp"

#include <algorithm>
#include <set>

namespace kakeya {

namespace {

bool line_on_quadric(const Field& f, const ProjLine& l, const QuadraticForm& form) {
    for (const ProjPoint& p : points_on(f, l))
        if (form.eval(f, p) != 0) return false;
    return true;
}

int conic_index_of(const Conic& c, const ProjPoint& p) {
    for (std::size_t i = 0; i < c.points.size(); ++i)
        if (c.points[i] == p) return int(i);
    return -1;
}

Conic conic_of_quadric(const Field& f, const HyperbolicQuadric& quad) {
    Conic c = conic_from_form(f, restrict_to_infinity(quad.form));
    // The quadric's infinite points must be exactly the conic's points.
    std::size_t inf = 0;
    for (const ProjPoint& p : quad.points)
        if (is_infinite(p)) {
            if (conic_index_of(c, p) < 0)
                throw InvalidArgument("quadric does not meet the infinite plane in a conic");
            ++inf;
        }
    if (inf != c.points.size())
        throw InvalidArgument("quadric does not meet the infinite plane in a conic");
    return c;
}

} // namespace

std::vector<ProjLine> regulus_lines_by_conic_index(const Field& f, const Conic& c,
                                                   const std::vector<ProjLine>& regulus) {
    std::vector<ProjLine> by_index(c.points.size());
    std::vector<bool> seen(c.points.size(), false);
    for (const ProjLine& l : regulus) {
        int idx = conic_index_of(c, infinite_point(f, l));
        if (idx < 0 || seen[std::size_t(idx)])
            throw StructureError("regulus lines do not match the conic points one-to-one");
        by_index[std::size_t(idx)] = l;
        seen[std::size_t(idx)] = true;
    }
    for (bool s : seen)
        if (!s) throw StructureError("regulus lines do not match the conic points one-to-one");
    return by_index;
}

KakeyaLineSet make_line_set(Field field, Conic conic, std::vector<ProjLine> lines) {
    if (lines.size() != field.q() + 1)
        throw InvalidArgument("a line set needs exactly q+1 lines");
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (line_at_infinity(lines[i]))
            throw InvalidArgument("line " + std::to_string(i) + " lies in the plane at infinity");
        if (!(infinite_point(field, lines[i]) == conic.points[i]))
            throw InvalidArgument("line " + std::to_string(i) +
                                  " does not pass through its conic point");
    }
    return {std::move(field), std::move(conic), std::move(lines)};
}

KakeyaSet kakeya_points(const KakeyaLineSet& l) {
    const Field& f = l.field;
    std::set<int> seen;
    std::vector<std::pair<int, ProjPoint>> pts;
    for (const ProjLine& line : l.lines)
        for (const ProjPoint& p : points_on(f, line)) {
            if (is_infinite(p)) continue;
            ProjPoint a = to_affine(f, p);
            int idx = affine_index(f, a);
            if (seen.insert(idx).second) pts.emplace_back(idx, a);
        }
    std::sort(pts.begin(), pts.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    KakeyaSet ks;
    ks.points.reserve(pts.size());
    for (auto& [idx, p] : pts) ks.points.push_back(p);
    ks.size = int(ks.points.size());
    return ks;
}

int gamma(unsigned q) {
    unsigned long long qq = q;
    return int((3 * qq * qq + 2 * qq) / 4);
}

CliqueGraph build_gamma(const KakeyaLineSet& l) {
    const Field& f = l.field;
    int n = int(l.lines.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (meet(f, l.lines[std::size_t(i)], l.lines[std::size_t(j)]).has_value())
                edges.emplace_back(i, j);
    return graph_from_edges(n, edges);
}

int size_via_cliques(const KakeyaLineSet& l) {
    int q = int(l.field.q());
    return q * (q + 1) - c_value(build_gamma(l));
}

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::RegulusSplit: return "regulus-split";
        case Variant::SecantVariant: return "secant";
        case Variant::Other: return "other";
    }
    return "other";
}

const char* secant_detail_name(SecantDetail d) {
    switch (d) {
        case SecantDetail::None: return "none";
        case SecantDetail::OnRLine: return "on-r-line";
        case SecantDetail::OnRPrimeLine: return "on-r-prime-line";
        case SecantDetail::OnBoth: return "on-both";
    }
    return "none";
}

KakeyaLineSet construct_regulus_split(Geometry& g, int k, const HyperbolicQuadric& quad) {
    const Field& f = g.field();
    int q = int(f.q());
    if (k < 0 || k > q + 1) throw InvalidArgument("k must lie in [0, q+1]");
    Conic c = conic_of_quadric(f, quad);
    auto r_lines = regulus_lines_by_conic_index(f, c, quad.regulus_r);
    auto rp_lines = regulus_lines_by_conic_index(f, c, quad.regulus_rp);
    std::vector<ProjLine> lines(std::size_t(q + 1));
    for (int i = 0; i <= q; ++i)
        lines[std::size_t(i)] = i < k ? r_lines[std::size_t(i)] : rp_lines[std::size_t(i)];
    return make_line_set(f, std::move(c), std::move(lines));
}

std::vector<SecantChoice> enumerate_secant_choices(Geometry& g, int k,
                                                   const HyperbolicQuadric& quad) {
    const Field& f = g.field();
    int q = int(f.q());
    if (k < 0 || k > q) throw InvalidArgument("k must lie in [0, q]");
    Conic c = conic_of_quadric(f, quad);
    auto r_lines = regulus_lines_by_conic_index(f, c, quad.regulus_r);
    auto rp_lines = regulus_lines_by_conic_index(f, c, quad.regulus_rp);
    const ProjPoint& last = c.points[std::size_t(q)];

    // For each affine quadric point, the conic indices of the two
    // generators through it.
    std::vector<std::pair<int, ProjPoint>> affine_pts;
    for (const ProjPoint& p : quad.points)
        if (!is_infinite(p)) affine_pts.emplace_back(affine_index(f, p), p);
    std::sort(affine_pts.begin(), affine_pts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    auto generator_index = [&](const std::vector<ProjLine>& by_index, const ProjPoint& p) {
        for (std::size_t i = 0; i < by_index.size(); ++i)
            for (const ProjPoint& lp : points_on(f, by_index[i]))
                if (lp == p) return int(i);
        throw StructureError("quadric point lies on no generator");
    };

    std::vector<SecantChoice> out;
    for (const auto& [idx, x] : affine_pts) {
        int ri = generator_index(r_lines, x);
        int rpi = generator_index(rp_lines, x);
        if (ri == q || rpi == q) continue; // the line to `last` would be a generator
        bool qual_r = ri < k;
        bool qual_rp = rpi >= k && rpi <= q - 1;
        if (!qual_r && !qual_rp) continue;
        SecantChoice choice;
        choice.line = line_through(f, last, x);
        choice.detail = qual_r && qual_rp  ? SecantDetail::OnBoth
                        : qual_r           ? SecantDetail::OnRLine
                                           : SecantDetail::OnRPrimeLine;
        choice.on_r_index = qual_r ? ri : -1;
        choice.on_rp_index = qual_rp ? rpi : -1;
        out.push_back(std::move(choice));
    }
    return out;
}

KakeyaLineSet construct_secant_variant(Geometry& g, int k, const HyperbolicQuadric& quad,
                                       const ProjLine& m) {
    const Field& f = g.field();
    int q = int(f.q());
    if (k < 0 || k > q) throw InvalidArgument("k must lie in [0, q]");
    Conic c = conic_of_quadric(f, quad);
    if (line_at_infinity(m)) throw InvalidArgument("secant lies in the plane at infinity");
    if (!(infinite_point(f, m) == c.points[std::size_t(q)]))
        throw InvalidArgument("secant does not pass through the last conic point");
    // The secant must meet the quadric in exactly one further point, and
    // that point must lie on one of the chosen regulus lines.
    std::vector<ProjPoint> hits;
    for (const ProjPoint& p : points_on(f, m))
        if (quad.form.eval(f, p) == 0) hits.push_back(p);
    if (hits.size() != 2)
        throw InvalidArgument(hits.size() < 2 ? "line is tangent to the quadric"
                                              : "line lies on the quadric");
    ProjPoint second = is_infinite(hits[0]) ? hits[1] : hits[0];
    auto r_lines = regulus_lines_by_conic_index(f, c, quad.regulus_r);
    auto rp_lines = regulus_lines_by_conic_index(f, c, quad.regulus_rp);
    bool qualifies = false;
    for (int i = 0; i < k && !qualifies; ++i)
        for (const ProjPoint& p : points_on(f, r_lines[std::size_t(i)]))
            if (p == second) {
                qualifies = true;
                break;
            }
    for (int i = k; i <= q - 1 && !qualifies; ++i)
        for (const ProjPoint& p : points_on(f, rp_lines[std::size_t(i)]))
            if (p == second) {
                qualifies = true;
                break;
            }
    if (!qualifies)
        throw InvalidArgument("the second quadric point of the secant is on no chosen line");
    std::vector<ProjLine> lines(std::size_t(q + 1));
    for (int i = 0; i < q; ++i)
        lines[std::size_t(i)] = i < k ? r_lines[std::size_t(i)] : rp_lines[std::size_t(i)];
    lines[std::size_t(q)] = m;
    return make_line_set(f, std::move(c), std::move(lines));
}

std::vector<HyperbolicQuadric> pencil_hyperbolics(Geometry& g, const Conic& c) {
    const Field& f = g.field();
    std::vector<HyperbolicQuadric> out;
    unsigned q = f.q();
    QuadraticForm base = lift_planar_form(c.form);
    for (unsigned a0 = 0; a0 < q; ++a0)
        for (unsigned a1 = 0; a1 < q; ++a1)
            for (unsigned a2 = 0; a2 < q; ++a2)
                for (unsigned a3 = 0; a3 < q; ++a3) {
                    QuadraticForm form = base;
                    form.coef[std::size_t(QuadraticForm::index(4, 0, 3))] = Fel(a0);
                    form.coef[std::size_t(QuadraticForm::index(4, 1, 3))] = Fel(a1);
                    form.coef[std::size_t(QuadraticForm::index(4, 2, 3))] = Fel(a2);
                    form.coef[std::size_t(QuadraticForm::index(4, 3, 3))] = Fel(a3);
                    try {
                        out.push_back(make_hyperbolic(g, std::move(form)));
                    } catch (const StructureError&) {
                        // not hyperbolic; skip
                    }
                }
    return out;
}

namespace {

std::optional<ConstructionLabel> classify_regulus_split(const Field& f, const KakeyaLineSet& l,
                                                        const HyperbolicQuadric& quad) {
    int q = int(f.q());
    std::vector<int> on;
    for (std::size_t i = 0; i < l.lines.size(); ++i)
        if (line_on_quadric(f, l.lines[i], quad.form)) on.push_back(int(i));
    if (int(on.size()) != q + 1) return std::nullopt;
    auto r_membership = [&](const ProjLine& line) {
        return std::find(quad.regulus_r.begin(), quad.regulus_r.end(), line) !=
               quad.regulus_r.end();
    };
    ConstructionLabel label;
    label.variant = Variant::RegulusSplit;
    label.quadric = quad.form;
    for (int i : on)
        if (r_membership(l.lines[std::size_t(i)])) label.r_side.push_back(i);
    label.side_r = int(label.r_side.size());
    label.side_rp = q + 1 - label.side_r;
    label.k = std::min(label.side_r, label.side_rp);
    return label;
}

std::optional<ConstructionLabel> classify_secant(const Field& f, const KakeyaLineSet& l,
                                                 const HyperbolicQuadric& quad) {
    int q = int(f.q());
    std::vector<int> on;
    for (std::size_t i = 0; i < l.lines.size(); ++i)
        if (line_on_quadric(f, l.lines[i], quad.form)) on.push_back(int(i));

    auto r_membership = [&](const ProjLine& line) {
        return std::find(quad.regulus_r.begin(), quad.regulus_r.end(), line) !=
               quad.regulus_r.end();
    };

    if (int(on.size()) != q) return std::nullopt;

    int t = -1;
    for (int i = 0; i <= q; ++i)
        if (std::find(on.begin(), on.end(), i) == on.end()) t = i;
    const ProjLine& m = l.lines[std::size_t(t)];
    std::vector<ProjPoint> hits;
    for (const ProjPoint& p : points_on(f, m))
        if (quad.form.eval(f, p) == 0) hits.push_back(p);
    if (hits.size() != 2) return std::nullopt; // tangent line, not a secant
    ProjPoint second = is_infinite(hits[0]) ? hits[1] : hits[0];
    if (is_infinite(second)) return std::nullopt;

    // The second point qualifies iff one of the two generators through it
    // is a chosen line of the set.
    bool qual_r = false, qual_rp = false;
    for (int i : on) {
        const ProjLine& chosen = l.lines[std::size_t(i)];
        bool contains = false;
        for (const ProjPoint& p : points_on(f, chosen))
            if (p == second) {
                contains = true;
                break;
            }
        if (!contains) continue;
        (r_membership(chosen) ? qual_r : qual_rp) = true;
    }
    if (!qual_r && !qual_rp) return std::nullopt;

    ConstructionLabel label;
    label.variant = Variant::SecantVariant;
    label.quadric = quad.form;
    label.secant_index = t;
    label.secant_line = m;
    for (int i : on)
        if (r_membership(l.lines[std::size_t(i)])) label.r_side.push_back(i);
    label.side_r = int(label.r_side.size());
    label.side_rp = q - label.side_r;
    label.k = std::min(label.side_r, label.side_rp);
    label.detail = qual_r && qual_rp ? SecantDetail::OnBoth
                   : qual_r          ? SecantDetail::OnRLine
                                     : SecantDetail::OnRPrimeLine;
    return label;
}

} // namespace

ConstructionLabel recognize(Geometry& g, const KakeyaLineSet& l) {
    const Field& f = g.field();
    // The quadrics spanned by the disjoint pairs, in pair index order.
    std::vector<HyperbolicQuadric> witnesses;
    for (std::size_t i = 0; i < l.lines.size(); ++i)
        for (std::size_t j = i + 1; j < l.lines.size(); ++j) {
            if (meet(f, l.lines[i], l.lines[j]).has_value()) continue;
            witnesses.push_back(unique_quadric_through(g, l.conic, l.lines[i], l.lines[j]));
        }
    // A full split outranks a secant description, so all witnesses are
    // checked for it before any secant match is accepted.
    for (const HyperbolicQuadric& quad : witnesses)
        if (auto label = classify_regulus_split(f, l, quad)) return *label;
    for (const HyperbolicQuadric& quad : witnesses)
        if (auto label = classify_secant(f, l, quad)) return *label;
    if (witnesses.empty()) {
        // All lines pairwise meet, so every candidate witness contains two
        // meeting lines; only a pair lying on exactly one hyperbolic quadric
        // of the pencil through the conic can seed a witness.
        auto pencil = pencil_hyperbolics(g, l.conic);
        for (std::size_t i = 0; i < l.lines.size(); ++i)
            for (std::size_t j = i + 1; j < l.lines.size(); ++j) {
                const HyperbolicQuadric* unique_quad = nullptr;
                int count = 0;
                for (const HyperbolicQuadric& h : pencil)
                    if (line_on_quadric(f, l.lines[i], h.form) &&
                        line_on_quadric(f, l.lines[j], h.form)) {
                        unique_quad = &h;
                        ++count;
                    }
                if (count != 1) continue;
                if (auto label = classify_secant(f, l, *unique_quad)) return *label;
            }
    }
    return ConstructionLabel{};
}

KakeyaLineSet rebuild_from_label(Geometry& g, const Conic& conic, const ConstructionLabel& label) {
    if (label.variant == Variant::Other || !label.quadric)
        throw InvalidArgument("label carries no construction witness");
    const Field& f = g.field();
    HyperbolicQuadric quad = make_hyperbolic(g, *label.quadric);
    auto r_lines = regulus_lines_by_conic_index(f, conic, quad.regulus_r);
    auto rp_lines = regulus_lines_by_conic_index(f, conic, quad.regulus_rp);
    int q = int(f.q());
    std::vector<ProjLine> lines(std::size_t(q + 1));
    for (int i = 0; i <= q; ++i) {
        bool in_r = std::find(label.r_side.begin(), label.r_side.end(), i) != label.r_side.end();
        lines[std::size_t(i)] = in_r ? r_lines[std::size_t(i)] : rp_lines[std::size_t(i)];
    }
    if (label.variant == Variant::SecantVariant) {
        if (label.secant_index < 0 || !label.secant_line)
            throw InvalidArgument("secant label without a secant line");
        lines[std::size_t(label.secant_index)] = *label.secant_line;
    }
    return make_line_set(f, conic, std::move(lines));
}

} // namespace kakeya
