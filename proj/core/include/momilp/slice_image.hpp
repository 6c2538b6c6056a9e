#ifndef MOMILP_SLICE_IMAGE_HPP
#define MOMILP_SLICE_IMAGE_HPP

#include "momilp/geometry.hpp"
#include "momilp/milp.hpp"

namespace momilp {

/// Objective-space set {y : y >= f(x), x feasible in the slice}; unbounded
/// along the nonnegative orthant, pointed when the image is bounded below.
struct UpperImage {
    Polytope polyhedron;
    Slice slice;
};

/// A face of some slice's upper image supported by a strictly positive
/// normal: one candidate polytope of the front superset. Bounded.
struct FrontPiece {
    Polytope polytope;
    Slice slice;
    int piece_id = -1;
};

/// Exact facet description of the slice's upper image: the objective rows
/// are linked to fresh image coordinates and the decision variables are
/// eliminated. Throws SliceInfeasibleError when the slice LP is empty and
/// PipelineError when some objective is unbounded below on the slice.
UpperImage compute_upper_image(const MomilpProblem& problem, const Slice& slice);

/// Every maximal face of the image that admits a strictly positive
/// supporting normal, i.e. the faces carrying the slice's nondominated
/// points. Deterministic order (lexicographic by vertex list).
std::vector<FrontPiece> nondominated_faces(const UpperImage& image);

} // namespace momilp

#endif
