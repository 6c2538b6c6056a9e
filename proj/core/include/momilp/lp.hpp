#ifndef MOMILP_LP_HPP
#define MOMILP_LP_HPP

#include <optional>
#include <vector>

#include "momilp/rational.hpp"

namespace momilp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
    Vec coeffs;
    Relation rel = Relation::LessEqual;
    Rational rhs;
};

/// Optional bounds; unset means unbounded on that side.
struct VarBounds {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
};

/// min objective . x  subject to the constraint rows and variable bounds.
struct LinearProgram {
    Vec objective;
    std::vector<Constraint> constraints;
    std::vector<VarBounds> bounds;

    int num_vars() const { return static_cast<int>(objective.size()); }
    void validate() const; // throws InputError on ragged rows
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Duals are reported against the standard equality form the solver builds
/// internally; verify_lp_certificate reconstructs that form and checks them.
struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    Vec point;       // optimal values of the original variables
    Rational value;  // objective . point
    Vec duals;       // one multiplier per standard-form row
};

/// Exact dense two-phase primal simplex with Bland's rule. Deterministic:
/// identical inputs give the identical basic solution.
LpOutcome solve_lp(const LinearProgram& lp);

/// Minimise the objectives in priority order, each later stage restricted
/// to the optimal level set of the earlier ones via exact equality rows.
/// The returned value is objectives[0] . point.
LpOutcome solve_lexicographic(LinearProgram lp, const std::vector<Vec>& objectives);

/// Recheck an Optimal outcome from first principles: primal feasibility of
/// the point, dual feasibility of the multipliers on the reconstructed
/// standard form, and matching objective values (strong duality).
bool verify_lp_certificate(const LinearProgram& lp, const LpOutcome& outcome);

} // namespace momilp

#endif
