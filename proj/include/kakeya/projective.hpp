#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "kakeya/gf.hpp"
#include "kakeya/linalg.hpp"

namespace kakeya {

/// Point of PG(2,q) or PG(3,q), stored as 3 or 4 homogeneous coordinates
/// normalized so the leftmost nonzero coordinate is 1. Unused trailing
/// coordinates are zero, so comparing the full array is safe.
struct ProjPoint {
    std::array<Fel, 4> v{};
    std::uint8_t ncoords = 4;

    bool operator==(const ProjPoint&) const = default;
};

/// Line of PG(3,q) as the reduced row echelon form of a 2x4 basis. RREF is
/// the unique canonical representative, so line equality is array equality.
struct ProjLine {
    std::array<std::array<Fel, 4>, 2> row{};

    bool operator==(const ProjLine&) const = default;
};

/// Plane of PG(3,q) by its dual coordinates, normalized leftmost-1.
struct ProjPlane {
    std::array<Fel, 4> dual{};

    bool operator==(const ProjPlane&) const = default;
};

struct PointHash {
    std::size_t operator()(const ProjPoint& p) const {
        std::size_t h = p.ncoords;
        for (Fel c : p.v) h = h * 1000003u + c;
        return h;
    }
};

struct LineHash {
    std::size_t operator()(const ProjLine& l) const {
        std::size_t h = 0;
        for (const auto& r : l.row)
            for (Fel c : r) h = h * 1000003u + c;
        return h;
    }
};

/// Scales coordinates so the leftmost nonzero entry is 1; throws on zero.
ProjPoint normalize_point(const Field& f, std::array<Fel, 4> raw, int ncoords);

/// All points of PG(dim,q), dim = 2 or 3, in a fixed enumeration order
/// (ascending coordinate tuples of the canonical representatives).
std::vector<ProjPoint> enumerate_points(const Field& f, int dim);

/// Requires distinct points of PG(3,q).
ProjLine line_through(const Field& f, const ProjPoint& p, const ProjPoint& q);

/// The q+1 points of a line, in a deterministic order.
std::vector<ProjPoint> points_on(const Field& f, const ProjLine& l);

/// The unique common point of two distinct coplanar lines; nullopt when the
/// lines are skew. Equal lines are rejected as a degenerate input.
std::optional<ProjPoint> meet(const Field& f, const ProjLine& l1, const ProjLine& l2);

/// Requires a non-collinear triple.
ProjPlane plane_through(const Field& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

/// Requires distinct planes.
ProjLine plane_meet_plane(const Field& f, const ProjPlane& a, const ProjPlane& b);

bool point_on_plane(const Field& f, const ProjPoint& p, const ProjPlane& pl);
bool line_in_plane(const Field& f, const ProjLine& l, const ProjPlane& pl);

/// The plane at infinity is fixed globally as X3 = 0.
bool is_infinite(const ProjPoint& p);

/// Split of a point by the plane at infinity: infinite iff X3 = 0; affine
/// points come back re-normalized to X3 = 1 for coverage counting.
struct AffineSplit {
    bool infinite = false;
    ProjPoint affine;
};
AffineSplit split_affine(const Field& f, const ProjPoint& p);

/// True when both basis rows lie in X3 = 0.
bool line_at_infinity(const ProjLine& l);

/// Affine representative with X3 = 1; requires a non-infinite point.
ProjPoint to_affine(const Field& f, const ProjPoint& p);

/// Index of an affine point by its (x,y,z) code triple: x + y q + z q^2.
int affine_index(const Field& f, const ProjPoint& p);

/// The unique point of a line on X3 = 0; requires the line not in X3 = 0.
ProjPoint infinite_point(const Field& f, const ProjLine& l);

/// x -> M x with renormalization; requires invertible M (4x4).
ProjPoint apply_collineation(const Field& f, const Mat& m, const ProjPoint& p);

/// Cached incidence tables of PG(3,q). Points are always built; the line
/// table is built once on first use and is read-only afterwards.
class Geometry {
public:
    explicit Geometry(const Field& f);

    const Field& field() const { return *f_; }
    const std::vector<ProjPoint>& points() const { return points_; }
    int point_index(const ProjPoint& p) const;

    /// All (q^2+1)(q^2+q+1) lines, ordered by their lowest two point indices.
    const std::vector<ProjLine>& lines();
    int line_index(const ProjLine& l);
    /// Point indices on lines()[i].
    const std::vector<std::vector<int>>& line_points();
    const std::vector<std::vector<int>>& lines_through_point();

private:
    const Field* f_;
    std::vector<ProjPoint> points_;
    std::unordered_map<ProjPoint, int, PointHash> point_index_;
    std::once_flag lines_once_;
    std::vector<ProjLine> lines_;
    std::unordered_map<ProjLine, int, LineHash> line_index_;
    std::vector<std::vector<int>> line_points_;
    std::vector<std::vector<int>> lines_through_point_;

    void ensure_lines();
};

} // namespace kakeya
