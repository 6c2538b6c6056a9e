#ifndef MOMILP_PHASE3_HPP
#define MOMILP_PHASE3_HPP

#include <optional>

#include "momilp/phase2.hpp"

namespace momilp {

/// Sub-polytope of a region's base dominated by another carved piece. The
/// generating piece is kept so membership tests can distinguish strictly
/// dominated points from boundary points shared with the dominator.
struct Removal {
    Polytope polytope;
    Polytope generator;
    int generator_piece_id = -1;
};

/// A base polytope minus its removals' strictly dominated subsets; possibly
/// non-convex as a point set.
struct ParetoRegion {
    Polytope base;
    std::vector<Removal> removals;
    int piece_id = -1;
    Slice slice;
};

struct ParetoFront {
    int k = 0;
    std::vector<ParetoRegion> regions;
};

/// The portion of q weakly dominated by p: q intersected with p plus the
/// nonnegative orthant. Nothing when that portion is empty or lies entirely
/// on p itself (shared boundary dominates nothing).
std::optional<Polytope> mark_dominated(const CarvedPiece& p, const CarvedPiece& q);

/// Pairwise marking over the carved set; regions whose base is covered by
/// its removals are dropped. Throws MutualDominanceError when a pair marks
/// in both directions, which a correct carve rules out.
ParetoFront assemble_front(const CarvedSet& carved);

/// Membership in the represented front: inside some region's base and not
/// strictly dominated by the generator of any removal covering the point.
bool region_contains(const ParetoFront& front, const Vec& y);

/// Exact cover test: does the union of `covers` contain all of `base`?
bool polytope_covered(const Polytope& base, const std::vector<Polytope>& covers);

} // namespace momilp

#endif
