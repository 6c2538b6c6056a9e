#ifndef MOMILP_PHASE2_HPP
#define MOMILP_PHASE2_HPP

#include "momilp/phase1.hpp"

namespace momilp {

/// A piece of the carved set, traceable to the candidate piece it came from.
struct CarvedPiece {
    Polytope polytope;
    Slice slice;
    int piece_id = -1;
    int parent_piece_id = -1;
};

/// Candidate pieces refined until every pair has disjoint relative
/// interiors; the union of pieces is unchanged as a point set.
struct CarvedSet {
    int k = 0;
    std::vector<CarvedPiece> pieces;
};

/// Split `p` around `i` (a subset of p): walk i's halfspaces in canonical
/// order and keep p cut by each complement, intersected with the halfspaces
/// already walked. Pieces without a point strictly past their defining cut
/// are slivers inside earlier pieces or i itself and are discarded; the kept
/// pieces together with i cover p exactly.
std::vector<Polytope> complement_split(const Polytope& p, const Polytope& i);

/// Repeatedly find a pair of pieces with intersecting relative interiors,
/// add the intersection as its own piece and replace both operands by their
/// complement splits. Terminates on interior-disjoint sets; throws
/// LimitError past `budget` carving steps.
CarvedSet carve(const CandidateSet& candidates, int budget = 10000);

/// True when every pair of polytopes has disjoint relative interiors.
bool verify_disjoint(const std::vector<Polytope>& pieces);

} // namespace momilp

#endif
