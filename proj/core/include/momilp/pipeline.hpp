#ifndef MOMILP_PIPELINE_HPP
#define MOMILP_PIPELINE_HPP

#include <optional>
#include <string>

#include "momilp/oracle.hpp"
#include "momilp/phase1.hpp"
#include "momilp/phase2.hpp"
#include "momilp/phase3.hpp"

namespace momilp {

enum class StopAfter { None, Phase1, Phase2 };

struct PipelineOptions {
    CollectStrategy strategy = CollectStrategy::Exhaustive;
    StopAfter stop_after = StopAfter::None;
    bool with_oracle = false;
    int oracle_resolution = 21;
    int oracle_samples = 1000;
    long long slice_limit = 4096;
    int carve_budget = 10000;
};

struct RunReport {
    int pieces_phase1 = 0;
    int pieces_phase2 = 0;
    int regions = 0;
    bool oracle_checked = false;
    int oracle_points = 0;
    int oracle_misses = 0;
    int oracle_false_claims = 0;
    double phase1_seconds = 0;
    double phase2_seconds = 0;
    double phase3_seconds = 0;
    double oracle_seconds = 0;

    std::string to_text() const;
};

struct PipelineResult {
    CandidateSet candidates;
    std::optional<CarvedSet> carved;
    std::optional<ParetoFront> front;
    std::optional<OracleFront> oracle;
    std::optional<FrontCheckReport> oracle_report;
    RunReport report;
};

/// Phase 1 (per strategy) -> Phase 2 -> Phase 3, honouring stop_after;
/// optionally runs the brute-force oracle comparison afterwards.
/// Deterministic output for fixed inputs and options.
PipelineResult run_pipeline(const MomilpProblem& problem, const PipelineOptions& options = {});

} // namespace momilp

#endif
