#ifndef MOMILP_ORACLE_HPP
#define MOMILP_ORACLE_HPP

#include "momilp/milp.hpp"
#include "momilp/phase3.hpp"

namespace momilp {

/// Ground-truth nondominated points from epsilon-constraint enumeration;
/// a finite subset of the true front, denser with higher resolution.
struct OracleFront {
    int k = 0;
    int resolution = 0;
    std::vector<Vec> points;

    std::string to_json() const;
};

/// Classical epsilon-constraint scan: objective bounds from 2k
/// single-objective MILPs, then one full lexicographic MILP per grid cell
/// over objectives 2..k, dominance-filtered. Uses only the MILP and LP
/// layers, nothing from the geometry pipeline under test.
OracleFront oracle_front(const MomilpProblem& problem, int resolution, long long slice_limit = 4096);

struct FrontCheckReport {
    std::vector<Vec> misses;                      // oracle points outside the front
    std::vector<std::pair<Vec, Vec>> false_claims; // (front sample, dominating oracle point)

    bool clean() const { return misses.empty() && false_claims.empty(); }
};

/// Exact two-sided comparison: every oracle point must be a member of the
/// front, and sampled front members must not be dominated by oracle points.
FrontCheckReport check_front(const ParetoFront& front, const OracleFront& oracle, int samples,
                             unsigned long long seed = 12345);

} // namespace momilp

#endif
