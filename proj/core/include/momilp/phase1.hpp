#ifndef MOMILP_PHASE1_HPP
#define MOMILP_PHASE1_HPP

#include <set>

#include "momilp/slice_image.hpp"

namespace momilp {

enum class CollectStrategy { Exhaustive, MilpDriven };

/// The candidate superset C: the union of its pieces contains every
/// nondominated point of the problem.
struct CandidateSet {
    int k = 0;
    CollectStrategy strategy = CollectStrategy::Exhaustive;
    std::vector<FrontPiece> pieces;
    std::set<Slice> discovered_slices;
};

/// Walk every feasible slice within the bound box and collect its
/// nondominated faces. Throws LimitError past `slice_limit` assignments.
CandidateSet collect_exhaustive(const MomilpProblem& problem, long long slice_limit = 4096);

/// Discover slices by repeated lexicographic MILP solves under rotating
/// objective priorities, excluding each processed slice with a Hamming cut,
/// until the MILP goes infeasible. Points falling beyond a known piece
/// vertex trigger a re-examination of that vertex's slice for additional
/// optimal faces (which the per-slice face collection has already captured).
CandidateSet collect_milp_driven(const MomilpProblem& problem, long long slice_limit = 4096);

} // namespace momilp

#endif
