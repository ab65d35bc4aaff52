#pragma once

#include <optional>
#include <vector>

#include "kakeya/cliques.hpp"
#include "kakeya/quadrics.hpp"

namespace kakeya {

/// One line through each conic point, none inside the plane at infinity.
/// lines[i] is the line assigned to conic.points[i].
struct KakeyaLineSet {
    Field field;
    Conic conic;
    std::vector<ProjLine> lines;
};

/// Validates the defining invariants and returns the line set.
KakeyaLineSet make_line_set(Field field, Conic conic, std::vector<ProjLine> lines);

/// The covered affine points, re-normalized to X3 = 1 and ordered by
/// affine index.
struct KakeyaSet {
    std::vector<ProjPoint> points;
    int size = 0;
};

KakeyaSet kakeya_points(const KakeyaLineSet& l);

/// Smallest possible size of a covered point set: floor((3q^2 + 2q) / 4).
int gamma(unsigned q);

/// The intersection graph: vertex i ~ vertex j iff the lines meet.
CliqueGraph build_gamma(const KakeyaLineSet& l);

/// Size computed through the intersection graph: q(q+1) - sum k_i (i-1).
/// Always equals kakeya_points(l).size; the two routes are independent.
int size_via_cliques(const KakeyaLineSet& l);

enum class Variant { RegulusSplit, SecantVariant, Other };
enum class SecantDetail { None, OnRLine, OnRPrimeLine, OnBoth };

const char* variant_name(Variant v);
const char* secant_detail_name(SecantDetail d);

/// Recognition result. For RegulusSplit, r_side lists the conic indices
/// whose line belongs to the first regulus of the witness quadric and the
/// quadric regenerates the line set. For SecantVariant the same applies to
/// the q on-quadric lines, with the leftover secant stored separately.
/// k is the split size normalized under regulus relabeling.
struct ConstructionLabel {
    Variant variant = Variant::Other;
    int k = 0;
    int side_r = 0, side_rp = 0;
    std::optional<QuadraticForm> quadric;
    std::vector<int> r_side;
    int secant_index = -1;
    std::optional<ProjLine> secant_line;
    SecantDetail detail = SecantDetail::None;
};

/// Takes k lines from the first regulus (conic indices 0..k-1) and the
/// remaining q+1-k from the opposite one. The quadric must meet the plane
/// at infinity in a non-singular conic, which becomes the line set's conic.
/// The covered set has exactly kq + (q+1-k)(q-k) points.
KakeyaLineSet construct_regulus_split(Geometry& g, int k, const HyperbolicQuadric& quad);

/// A line through the last conic point qualifying as the extra line of the
/// secant construction for the given k, together with where its second
/// quadric point sits.
struct SecantChoice {
    ProjLine line;
    SecantDetail detail = SecantDetail::None;
    int on_r_index = -1;  // conic index of the chosen first-regulus line hit
    int on_rp_index = -1; // conic index of the chosen opposite-regulus line hit
};

/// All qualifying secants for parameter k in [0, q], ordered by the affine
/// index of the second intersection point. The second point is always
/// affine: a line not inside the plane at infinity meets it only in its
/// conic point, so a second conic point cannot occur.
std::vector<SecantChoice> enumerate_secant_choices(Geometry& g, int k,
                                                   const HyperbolicQuadric& quad);

/// k regulus lines (indices 0..k-1), q-k opposite-regulus lines (indices
/// k..q-1) and the secant m through the last conic point. Covers exactly
/// kq + (q-k)^2 + (q-1) points.
KakeyaLineSet construct_secant_variant(Geometry& g, int k, const HyperbolicQuadric& quad,
                                       const ProjLine& m);

/// Classifies a line set against the quadrics spanned by its disjoint line
/// pairs, each of which determines a unique quadric through the conic. All
/// witnesses are checked for a full regulus split first, then for a secant
/// description; within a pass the first qualifying pair in index order
/// wins. When the set has no disjoint pair at all (a cone of concurrent
/// lines), pairs of meeting lines are tried against the pencil of
/// hyperbolic quadrics through the conic, using a pair only when exactly
/// one such quadric contains both lines.
ConstructionLabel recognize(Geometry& g, const KakeyaLineSet& l);

/// Regenerates the line set described by a non-Other label.
KakeyaLineSet rebuild_from_label(Geometry& g, const Conic& conic, const ConstructionLabel& label);

/// All hyperbolic quadrics whose restriction to the plane at infinity is
/// the conic's form: lift(C) + X3 (a0 X0 + a1 X1 + a2 X2 + a3 X3) over the
/// q^4 coefficient choices, filtered by the hyperbolicity checks.
std::vector<HyperbolicQuadric> pencil_hyperbolics(Geometry& g, const Conic& c);

/// The regulus line of the quadric through each conic point: result[i] is
/// the first-regulus (resp. opposite) line through conic.points[i].
std::vector<ProjLine> regulus_lines_by_conic_index(const Field& f, const Conic& c,
                                                   const std::vector<ProjLine>& regulus);

} // namespace kakeya
