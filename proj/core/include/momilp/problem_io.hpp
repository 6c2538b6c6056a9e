#ifndef MOMILP_PROBLEM_IO_HPP
#define MOMILP_PROBLEM_IO_HPP

#include <iosfwd>
#include <string>

#include "momilp/oracle.hpp"
#include "momilp/phase3.hpp"

namespace momilp {

/// Parse the plain-text problem format:
///
///   # comment
///   objectives 2
///   var z int 0 1
///   var u cont 0 3/2
///   obj 0 1 0
///   con 1 1 0 <= 3/2
///
/// Variables are declared first; each obj/con row carries one rational
/// coefficient per variable in declaration order, constraints end with a
/// relation (<=, =, >=) and a rational right-hand side. Continuous bounds
/// may be -inf/inf; integer bounds must be finite integers.
/// Throws ParseError with the offending line number.
MomilpProblem parse_problem_text(const std::string& text);
MomilpProblem parse_problem(const std::string& path);

std::string serialize_candidates(const CandidateSet& candidates);
std::string serialize_carved(const CarvedSet& carved);
std::string serialize_front(const ParetoFront& front);

/// Inverse of serialize_front; round-trips to a structurally equal value.
ParetoFront parse_front(const std::string& text);

/// CSV plot data for 2- or 3-objective fronts: one row per polytope vertex,
/// decimal coordinates plus exact-rational sidecar columns.
/// Throws UnsupportedDimensionError for other objective counts.
void emit_plot_data(const ParetoFront& front, std::ostream& os);

} // namespace momilp

#endif
