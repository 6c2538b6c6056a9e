#include "momilp/pipeline.hpp"

#include <chrono>
#include <sstream>

namespace momilp {

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "pieces_phase1=" << pieces_phase1 << '\n'
       << "pieces_phase2=" << pieces_phase2 << '\n'
       << "regions=" << regions << '\n';
    if (oracle_checked) {
        os << "oracle_points=" << oracle_points << '\n'
           << "oracle_misses=" << oracle_misses << '\n'
           << "oracle_false_claims=" << oracle_false_claims << '\n';
    }
    auto ms = [](double s) { return static_cast<long>(s * 1000.0); };
    os << "phase1_ms=" << ms(phase1_seconds) << '\n'
       << "phase2_ms=" << ms(phase2_seconds) << '\n'
       << "phase3_ms=" << ms(phase3_seconds) << '\n';
    if (oracle_checked) os << "oracle_ms=" << ms(oracle_seconds) << '\n';
    return os.str();
}

PipelineResult run_pipeline(const MomilpProblem& problem, const PipelineOptions& options) {
    problem.validate();
    PipelineResult result;
    using Clock = std::chrono::steady_clock;

    auto t0 = Clock::now();
    result.candidates = options.strategy == CollectStrategy::Exhaustive
                            ? collect_exhaustive(problem, options.slice_limit)
                            : collect_milp_driven(problem, options.slice_limit);
    auto t1 = Clock::now();
    result.report.pieces_phase1 = static_cast<int>(result.candidates.pieces.size());
    result.report.phase1_seconds = std::chrono::duration<double>(t1 - t0).count();
    if (options.stop_after == StopAfter::Phase1) return result;

    result.carved = carve(result.candidates, options.carve_budget);
    auto t2 = Clock::now();
    result.report.pieces_phase2 = static_cast<int>(result.carved->pieces.size());
    result.report.phase2_seconds = std::chrono::duration<double>(t2 - t1).count();
    if (options.stop_after == StopAfter::Phase2) return result;

    result.front = assemble_front(*result.carved);
    auto t3 = Clock::now();
    result.report.regions = static_cast<int>(result.front->regions.size());
    result.report.phase3_seconds = std::chrono::duration<double>(t3 - t2).count();

    if (options.with_oracle) {
        result.oracle = oracle_front(problem, options.oracle_resolution, options.slice_limit);
        result.oracle_report = check_front(*result.front, *result.oracle, options.oracle_samples);
        auto t4 = Clock::now();
        result.report.oracle_checked = true;
        result.report.oracle_points = static_cast<int>(result.oracle->points.size());
        result.report.oracle_misses = static_cast<int>(result.oracle_report->misses.size());
        result.report.oracle_false_claims = static_cast<int>(result.oracle_report->false_claims.size());
        result.report.oracle_seconds = std::chrono::duration<double>(t4 - t3).count();
    }
    return result;
}

} // namespace momilp
