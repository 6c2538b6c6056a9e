#ifndef MOMILP_MILP_HPP
#define MOMILP_MILP_HPP

#include <compare>
#include <string>
#include <vector>

#include "momilp/lp.hpp"
#include "momilp/rational.hpp"

namespace momilp {

struct Variable {
    std::string name;
    bool integer = false;
    std::optional<Rational> lower;
    std::optional<Rational> upper;

    long long int_lower() const;
    long long int_upper() const;
};

/// Multi-objective mixed-integer linear program, minimisation throughout.
/// Variables appended by Hamming-cut linearisation live past
/// num_primary_vars and never appear in slices or reported points.
struct MomilpProblem {
    int k = 0;
    std::vector<Vec> objectives; // k rows over all variables
    std::vector<Constraint> constraints;
    std::vector<Variable> variables;
    int num_primary_vars = 0;

    int num_vars() const { return static_cast<int>(variables.size()); }
    std::vector<int> integer_indices() const;         // every integer variable
    std::vector<int> primary_integer_indices() const; // integer variables of the model itself
    void validate() const;
};

/// Full assignment of the primary integer variables, in index order.
struct Slice {
    std::vector<long long> values;
    auto operator<=>(const Slice&) const = default;
};

/// H(x, reference) >= 1 over the primary integer variables.
struct HammingCut {
    Slice reference;
};

int hamming_distance(const std::vector<long long>& a, const std::vector<long long>& b);

/// Problem whose feasible set excludes exactly the integer assignments equal
/// to the cut's reference slice. Binary-only models get the direct
/// linearisation; general bounded integers get per-variable deviation
/// indicator binaries with big-M equal to the variable range.
MomilpProblem add_hamming_cut(const MomilpProblem& problem, const HammingCut& cut);

enum class MilpStatus { Optimal, Infeasible };

struct MilpOutcome {
    MilpStatus status = MilpStatus::Infeasible;
    Vec point;            // primary variables only
    Vec objective_values; // one value per solved objective stage
    Slice slice;
};

/// Exact lexicographic branch-and-bound. Objective vectors may be given over
/// the primary variables; they are zero-padded past them. Throws
/// PipelineError when a relaxation is unbounded.
MilpOutcome solve_milp_lex(const MomilpProblem& problem, const std::vector<Vec>& objectives,
                           const std::vector<HammingCut>& cuts = {});

/// LP restriction of the problem to one slice (integer variables pinned).
LinearProgram make_slice_lp(const MomilpProblem& problem, const Slice& slice);

/// Every assignment of the primary integer variables within bounds, in
/// odometer order. Throws LimitError past `limit` assignments.
std::vector<Slice> enumerate_slices(const MomilpProblem& problem, long long limit = 4096);

} // namespace momilp

#endif
