#ifndef MOMILP_GEOMETRY_HPP
#define MOMILP_GEOMETRY_HPP

#include <set>
#include <vector>

#include "momilp/polytope.hpp"

namespace momilp {

/// How a polytope P relates to another polytope Q under componentwise
/// minimisation. classify_polytope_dominance(P, Q) == CompletelyDominates
/// if and only if classify_polytope_dominance(Q, P) == DominatedBy.
enum class DominanceRelation {
    CompletelyDominates,
    PartiallyDominates,
    Incomparable,
    DominatedBy,
    PartiallyDominatedBy,
};

const char* to_string(DominanceRelation rel);

/// Facet description of conv(vertices) + cone(rays).
Polytope vrep_to_hrep(const std::vector<Vec>& vertices, const std::vector<Vec>& rays = {});

/// Extreme points and extreme rays of a halfspace intersection.
Polytope hrep_to_vrep(const std::vector<HalfSpace>& halfspaces, int ambient_dim);

Polytope intersect(const Polytope& p, const Polytope& q);

/// Orthogonal projection onto the coordinates not in `drop_indices`,
/// computed by Fourier-Motzkin elimination on the facet description.
/// `drop_indices` must be a strict, nonempty subset of the coordinates.
Polytope eliminate_variables(const Polytope& p, const std::set<int>& drop_indices);

/// P + {d : d >= 0}: every point weakly dominated by some point of P.
Polytope minkowski_sum_orthant(const Polytope& p);

/// a <= b componentwise with strict inequality somewhere (minimisation).
bool dominates_point(const Vec& a, const Vec& b);

/// True when some point of P strictly dominates some point of Q.
bool exists_strict_domination(const Polytope& p, const Polytope& q);

DominanceRelation classify_polytope_dominance(const Polytope& p, const Polytope& q);

/// Exact test for relint(P) intersecting relint(Q); the disjointness
/// currency of the carving phase.
bool relative_interiors_intersect(const Polytope& p, const Polytope& q);

/// Fourier-Motzkin elimination on a raw inequality system (each HalfSpace
/// over `ambient_dim` coordinates). Eliminated coordinates are removed from
/// the remaining rows, preserving the order of the kept ones. Intermediate
/// systems are pruned with exact LP redundancy tests to bound the blowup.
/// An infeasible input projects to an infeasible system; constructing a
/// Polytope from the result resolves emptiness exactly.
std::vector<HalfSpace> fourier_motzkin_project(std::vector<HalfSpace> rows, int ambient_dim,
                                               const std::set<int>& drop_indices);

} // namespace momilp

#endif
