#ifndef MOMILP_POLYTOPE_HPP
#define MOMILP_POLYTOPE_HPP

#include <string>
#include <vector>

#include "momilp/linalg.hpp"
#include "momilp/rational.hpp"

namespace momilp {

/// Closed halfspace {x : normal . x <= offset}. Canonical form scales the
/// row so the first nonzero normal entry has absolute value 1; equality of
/// canonical halfspaces is then syntactic.
struct HalfSpace {
    Vec normal;
    Rational offset;

    HalfSpace() = default;
    HalfSpace(Vec n, Rational o) : normal(std::move(n)), offset(std::move(o)) {}

    HalfSpace canonical() const;
    HalfSpace complement() const; // closed complement, {x : normal . x >= offset}

    Rational eval(const Vec& point) const { return dot(normal, point); }
    bool satisfied_by(const Vec& point) const { return eval(point) <= offset; }

    bool operator==(const HalfSpace& other) const = default;
    bool operator<(const HalfSpace& other) const;
};

/// Convex polyhedron carrying both descriptions at once, exact and in a
/// canonical form:
///   - vertices: the extreme points, lexicographically sorted;
///   - rays: the extreme rays (first nonzero entry scaled to unit magnitude);
///   - halfspaces: irredundant facets plus, for lower-dimensional bodies,
///     the affine-hull equalities stored as opposing halfspace pairs.
/// Both representations are derived at construction, so they always describe
/// the same point set and structural equality is point-set equality.
/// The empty polytope has no vertices, no rays, no halfspaces, affine_dim -1.
struct Polytope {
    int dim = 0;
    int affine_dim = -1;
    std::vector<Vec> vertices;
    std::vector<Vec> rays;
    std::vector<HalfSpace> halfspaces;

    /// Convex hull of `vertices` plus the cone of `rays`.
    /// Throws InputError on empty vertex list or mixed dimensions.
    static Polytope from_vertices(const std::vector<Vec>& verts, const std::vector<Vec>& ray_dirs = {});

    /// Intersection of halfspaces in ambient dimension `ambient_dim`; an
    /// infeasible system yields the empty polytope. Throws PipelineError if
    /// the polyhedron contains a line (never produced by this pipeline).
    static Polytope from_halfspaces(const std::vector<HalfSpace>& halfspaces, int ambient_dim);

    static Polytope empty(int ambient_dim);

    bool is_empty() const { return affine_dim < 0; }
    bool is_bounded() const { return rays.empty(); }

    bool contains(const Vec& point) const;

    /// True when this polytope's point set is a subset of `other`'s
    /// (vertices contained and rays in the recession cone).
    bool subset_of(const Polytope& other) const;

    bool operator==(const Polytope& other) const;

    /// Canonical JSON-like text form with rationals as [numerator, denominator].
    std::string to_json() const;
    static Polytope parse_json(const std::string& text);
};

} // namespace momilp

#endif
