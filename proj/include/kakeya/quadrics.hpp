#pragma once

#include <utility>
#include <vector>

#include "kakeya/projective.hpp"

namespace kakeya {

/// Quadratic form in dim = 3 or 4 variables, stored as the upper-triangular
/// coefficients a_ij (i <= j) in lexicographic order:
///   dim 3: (00,01,02,11,12,22)          6 coefficients
///   dim 4: (00,01,02,03,11,12,13,22,23,33)  10 coefficients
/// Q(lambda x) = lambda^2 Q(x), so the zero set is well-defined on
/// projective points. Coefficient storage works uniformly in every
/// characteristic, including 2, where a symmetric matrix could not
/// represent X0 X1 + X2^2.
struct QuadraticForm {
    int dim = 4;
    std::vector<Fel> coef;

    static int index(int dim, int i, int j);
    Fel eval(const Field& f, const ProjPoint& p) const;

    bool operator==(const QuadraticForm&) const = default;
};

/// Normalizes so the first nonzero coefficient is 1 (projective forms).
QuadraticForm normalize_form(const Field& f, QuadraticForm q);

/// Non-singular conic in the plane at infinity X3 = 0. The form has dim 3
/// (variables X0,X1,X2); points are stored embedded in PG(3,q) with X3 = 0,
/// in point-enumeration order.
struct Conic {
    QuadraticForm form; // dim 3
    std::vector<ProjPoint> points;
};

/// The conic X0 X1 + X2^2 = 0 in the plane at infinity.
Conic standard_conic(const Field& f);

/// Validates non-singularity: exactly q+1 points and no line of the plane
/// inside the zero set.
Conic conic_from_form(const Field& f, QuadraticForm form);

/// All projective points with Q(x) = 0, in point-enumeration order.
/// dim 3 forms are evaluated over PG(2,q), dim 4 over PG(3,q).
std::vector<ProjPoint> points_of(const Field& f, const QuadraticForm& q);

/// Every line of PG(3,q) contained in the zero set; brute force over the
/// cached line table, in table order.
std::vector<ProjLine> lines_on(Geometry& g, const QuadraticForm& q);

/// Splits the 2(q+1) lines of a hyperbolic quadric into its two reguli.
/// Within each part lines are pairwise skew; across parts every pair meets.
/// The part containing the first input line is labeled first. Throws
/// StructureError when the meet graph is not complete bipartite.
std::pair<std::vector<ProjLine>, std::vector<ProjLine>> partition_reguli(
    const Field& f, const std::vector<ProjLine>& lines);

struct HyperbolicQuadric {
    QuadraticForm form; // dim 4, normalized
    std::vector<ProjPoint> points;
    std::vector<ProjLine> lines;
    std::vector<ProjLine> regulus_r;      // contains lines[0]
    std::vector<ProjLine> regulus_rp;     // the opposite regulus
};

/// Builds a hyperbolic quadric from a form, verifying (q+1)^2 points and
/// 2(q+1) lines, and splitting the reguli.
HyperbolicQuadric make_hyperbolic(Geometry& g, QuadraticForm form);

/// The quadric X0 X1 + X2^2 - X1 X3 - X2 X3 = 0. It meets the plane at
/// infinity exactly in the standard conic and is hyperbolic for every q.
HyperbolicQuadric standard_quadric(Geometry& g);

/// Result of the linear solve behind unique_quadric_through, exposed so the
/// nullspace dimension can be checked directly.
struct QuadricSolve {
    int nullspace_dim = 0;
    QuadraticForm form; // valid when nullspace_dim == 1
};

/// Solves for the quadrics containing the conic whose restriction to the
/// plane at infinity is proportional to the conic's form: the family
/// lambda * C(X0,X1,X2) + X3 (a0 X0 + a1 X1 + a2 X2 + a3 X3), constrained
/// to vanish on every point of both lines. Homogeneous linear system in
/// (lambda, a0..a3).
QuadricSolve solve_quadric_through(const Field& f, const Conic& c, const ProjLine& m,
                                   const ProjLine& mp);

/// The unique hyperbolic quadric containing the conic and two disjoint
/// lines, neither in the plane at infinity, both meeting the conic.
/// Precondition violations throw InvalidArgument; a nullspace dimension
/// other than 1 throws StructureError (impossible for valid input).
HyperbolicQuadric unique_quadric_through(Geometry& g, const Conic& c, const ProjLine& m,
                                         const ProjLine& mp);

/// Lifts a dim-3 form to dim 4 with zero X3 coefficients.
QuadraticForm lift_planar_form(const QuadraticForm& planar);

/// Restriction of a dim-4 form to X3 = 0 (drops the X3 coefficients).
QuadraticForm restrict_to_infinity(const QuadraticForm& form);

} // namespace kakeya
