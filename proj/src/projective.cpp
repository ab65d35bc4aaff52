#include "kakeya/projective.hpp"

#include <algorithm>

namespace kakeya {

ProjPoint normalize_point(const Field& f, std::array<Fel, 4> raw, int ncoords) {
    int lead = -1;
    for (int i = 0; i < ncoords; ++i)
        if (raw[std::size_t(i)] != 0) {
            lead = i;
            break;
        }
    if (lead < 0) throw InvalidArgument("zero vector has no projective point");
    Fel s = f.inv(raw[std::size_t(lead)]);
    ProjPoint p;
    p.ncoords = std::uint8_t(ncoords);
    for (int i = 0; i < ncoords; ++i) p.v[std::size_t(i)] = f.mul(raw[std::size_t(i)], s);
    return p;
}

std::vector<ProjPoint> enumerate_points(const Field& f, int dim) {
    if (dim != 2 && dim != 3) throw InvalidArgument("dim must be 2 or 3");
    int n = dim + 1;
    std::vector<ProjPoint> out;
    // Canonical representatives: leading 1 at position `lead`, zeros before,
    // arbitrary coordinates after. Tail counts ascending give a fixed order.
    for (int lead = 0; lead < n; ++lead) {
        unsigned tail = n - 1 - lead;
        unsigned long long count = 1;
        for (unsigned i = 0; i < tail; ++i) count *= f.q();
        for (unsigned long long m = 0; m < count; ++m) {
            ProjPoint p;
            p.ncoords = std::uint8_t(n);
            p.v[std::size_t(lead)] = 1;
            unsigned long long rest = m;
            for (int i = n - 1; i > lead; --i) {
                p.v[std::size_t(i)] = Fel(rest % f.q());
                rest /= f.q();
            }
            out.push_back(p);
        }
    }
    return out;
}

ProjLine line_through(const Field& f, const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw InvalidArgument("line_through requires distinct points");
    Mat m(2, 4);
    for (int j = 0; j < 4; ++j) {
        m.at(0, j) = p.v[std::size_t(j)];
        m.at(1, j) = q.v[std::size_t(j)];
    }
    if (rref(f, m) != 2) throw InvalidArgument("line_through requires distinct points");
    ProjLine l;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) l.row[std::size_t(i)][std::size_t(j)] = m.at(i, j);
    return l;
}

std::vector<ProjPoint> points_on(const Field& f, const ProjLine& l) {
    std::vector<ProjPoint> out;
    out.reserve(f.q() + 1);
    // r0 + t r1 for all t, then r1.
    for (Fel t = 0; t < Fel(f.q()); ++t) {
        std::array<Fel, 4> raw;
        for (int j = 0; j < 4; ++j)
            raw[std::size_t(j)] = f.add(l.row[0][std::size_t(j)], f.mul(t, l.row[1][std::size_t(j)]));
        out.push_back(normalize_point(f, raw, 4));
    }
    ProjPoint r1;
    r1.v = l.row[1];
    out.push_back(normalize_point(f, r1.v, 4));
    return out;
}

std::optional<ProjPoint> meet(const Field& f, const ProjLine& l1, const ProjLine& l2) {
    if (l1 == l2) throw InvalidArgument("meet requires distinct lines");
    // Solve a*u0 + b*u1 + c*v0 + d*v1 = 0 with columns u0,u1,v0,v1.
    Mat m(4, 4);
    for (int i = 0; i < 4; ++i) {
        m.at(i, 0) = l1.row[0][std::size_t(i)];
        m.at(i, 1) = l1.row[1][std::size_t(i)];
        m.at(i, 2) = l2.row[0][std::size_t(i)];
        m.at(i, 3) = l2.row[1][std::size_t(i)];
    }
    auto ns = nullspace(f, m);
    if (ns.empty()) return std::nullopt; // skew
    const auto& co = ns.front();
    std::array<Fel, 4> raw{};
    for (int i = 0; i < 4; ++i)
        raw[std::size_t(i)] =
            f.add(f.mul(co[0], l1.row[0][std::size_t(i)]), f.mul(co[1], l1.row[1][std::size_t(i)]));
    return normalize_point(f, raw, 4);
}

ProjPlane plane_through(const Field& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    Mat m(3, 4);
    for (int j = 0; j < 4; ++j) {
        m.at(0, j) = a.v[std::size_t(j)];
        m.at(1, j) = b.v[std::size_t(j)];
        m.at(2, j) = c.v[std::size_t(j)];
    }
    auto ns = nullspace(f, m);
    if (ns.size() != 1) throw InvalidArgument("plane_through requires a non-collinear triple");
    ProjPlane pl;
    std::array<Fel, 4> raw{ns[0][0], ns[0][1], ns[0][2], ns[0][3]};
    pl.dual = normalize_point(f, raw, 4).v;
    return pl;
}

ProjLine plane_meet_plane(const Field& f, const ProjPlane& a, const ProjPlane& b) {
    if (a == b) throw InvalidArgument("plane_meet_plane requires distinct planes");
    Mat m(2, 4);
    for (int j = 0; j < 4; ++j) {
        m.at(0, j) = a.dual[std::size_t(j)];
        m.at(1, j) = b.dual[std::size_t(j)];
    }
    auto ns = nullspace(f, m);
    if (ns.size() != 2) throw StructureError("planes do not meet in a line");
    ProjPoint p, q;
    for (int j = 0; j < 4; ++j) {
        p.v[std::size_t(j)] = ns[0][std::size_t(j)];
        q.v[std::size_t(j)] = ns[1][std::size_t(j)];
    }
    return line_through(f, normalize_point(f, p.v, 4), normalize_point(f, q.v, 4));
}

bool point_on_plane(const Field& f, const ProjPoint& p, const ProjPlane& pl) {
    Fel s = 0;
    for (int j = 0; j < 4; ++j) s = f.add(s, f.mul(p.v[std::size_t(j)], pl.dual[std::size_t(j)]));
    return s == 0;
}

bool line_in_plane(const Field& f, const ProjLine& l, const ProjPlane& pl) {
    for (const auto& r : l.row) {
        Fel s = 0;
        for (int j = 0; j < 4; ++j) s = f.add(s, f.mul(r[std::size_t(j)], pl.dual[std::size_t(j)]));
        if (s != 0) return false;
    }
    return true;
}

bool is_infinite(const ProjPoint& p) { return p.v[3] == 0; }

AffineSplit split_affine(const Field& f, const ProjPoint& p) {
    if (is_infinite(p)) return {true, {}};
    return {false, to_affine(f, p)};
}

bool line_at_infinity(const ProjLine& l) { return l.row[0][3] == 0 && l.row[1][3] == 0; }

ProjPoint to_affine(const Field& f, const ProjPoint& p) {
    if (is_infinite(p)) throw InvalidArgument("point lies in the plane at infinity");
    Fel s = f.inv(p.v[3]);
    ProjPoint r;
    for (int j = 0; j < 4; ++j) r.v[std::size_t(j)] = f.mul(p.v[std::size_t(j)], s);
    return r;
}

int affine_index(const Field& f, const ProjPoint& p) {
    ProjPoint a = to_affine(f, p);
    return int(a.v[0]) + int(f.q()) * int(a.v[1]) + int(f.q()) * int(f.q()) * int(a.v[2]);
}

ProjPoint infinite_point(const Field& f, const ProjLine& l) {
    if (line_at_infinity(l)) throw InvalidArgument("line lies in the plane at infinity");
    // The RREF rows have at most one with nonzero X3; eliminate it.
    if (l.row[1][3] == 0) {
        ProjPoint p;
        p.v = l.row[1];
        return normalize_point(f, p.v, 4);
    }
    // row0 - (row0[3]/row1[3]) row1 has X3 = 0. In RREF row0[3] != 0 only
    // when row1[3] == 0, so here row0[3] may or may not vanish.
    Fel t = f.div(l.row[0][3], l.row[1][3]);
    std::array<Fel, 4> raw;
    for (int j = 0; j < 4; ++j)
        raw[std::size_t(j)] = f.sub(l.row[0][std::size_t(j)], f.mul(t, l.row[1][std::size_t(j)]));
    return normalize_point(f, raw, 4);
}

ProjPoint apply_collineation(const Field& f, const Mat& m, const ProjPoint& p) {
    if (m.rows != 4 || m.cols != 4) throw InvalidArgument("collineation matrix must be 4x4");
    if (rank(f, m) != 4) throw InvalidArgument("collineation matrix is singular");
    std::array<Fel, 4> raw{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            raw[std::size_t(i)] = f.add(raw[std::size_t(i)], f.mul(m.at(i, j), p.v[std::size_t(j)]));
    return normalize_point(f, raw, 4);
}

Geometry::Geometry(const Field& f) : f_(&f) {
    points_ = enumerate_points(f, 3);
    point_index_.reserve(points_.size() * 2);
    for (std::size_t i = 0; i < points_.size(); ++i) point_index_[points_[i]] = int(i);
}

int Geometry::point_index(const ProjPoint& p) const {
    auto it = point_index_.find(p);
    if (it == point_index_.end()) throw InvalidArgument("point not in PG(3,q) table");
    return it->second;
}

void Geometry::ensure_lines() {
    std::call_once(lines_once_, [this] {
        const Field& f = *f_;
        std::unordered_map<ProjLine, int, LineHash> seen;
        for (std::size_t i = 0; i < points_.size(); ++i) {
            for (std::size_t j = i + 1; j < points_.size(); ++j) {
                ProjLine l = line_through(f, points_[i], points_[j]);
                if (seen.emplace(l, int(lines_.size())).second) lines_.push_back(l);
            }
        }
        line_index_ = std::move(seen);
        line_points_.resize(lines_.size());
        lines_through_point_.resize(points_.size());
        for (std::size_t li = 0; li < lines_.size(); ++li) {
            for (const ProjPoint& p : points_on(f, lines_[li])) {
                int pi = point_index(p);
                line_points_[li].push_back(pi);
                lines_through_point_[std::size_t(pi)].push_back(int(li));
            }
            std::sort(line_points_[li].begin(), line_points_[li].end());
        }
    });
}

const std::vector<ProjLine>& Geometry::lines() {
    ensure_lines();
    return lines_;
}

int Geometry::line_index(const ProjLine& l) {
    ensure_lines();
    auto it = line_index_.find(l);
    if (it == line_index_.end()) throw InvalidArgument("line not in PG(3,q) table");
    return it->second;
}

const std::vector<std::vector<int>>& Geometry::line_points() {
    ensure_lines();
    return line_points_;
}

const std::vector<std::vector<int>>& Geometry::lines_through_point() {
    ensure_lines();
    return lines_through_point_;
}

} // namespace kakeya
