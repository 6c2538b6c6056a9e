#include "momilp/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "momilp/errors.hpp"
#include "momilp/geometry.hpp"
#include "momilp/linalg.hpp"

namespace momilp {

std::string OracleFront::to_json() const {
    std::ostringstream os;
    os << "{\"k\":" << k << ",\"resolution\":" << resolution << ",\"points\":[";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t c = 0; c < points[i].size(); ++c) {
            if (c) os << ',';
            os << '[' << numerator(points[i][c]).str() << ',' << denominator(points[i][c]).str() << ']';
        }
        os << ']';
    }
    os << "]}";
    return os.str();
}

OracleFront oracle_front(const MomilpProblem& problem, int resolution, long long slice_limit) {
    problem.validate();
    if (resolution < 1) throw InputError("oracle resolution must be positive");
    enumerate_slices(problem, slice_limit); // enforces the slice budget

    OracleFront out;
    out.k = problem.k;
    out.resolution = resolution;

    // Objective ranges from 2k single-objective solves.
    Vec lo(problem.k), hi(problem.k);
    for (int j = 0; j < problem.k; ++j) {
        const MilpOutcome mn = solve_milp_lex(problem, {problem.objectives[j]});
        if (mn.status == MilpStatus::Infeasible) return out;
        lo[j] = mn.objective_values[0];
        Vec negated(problem.objectives[j].size());
        for (std::size_t c = 0; c < negated.size(); ++c) negated[c] = -problem.objectives[j][c];
        const MilpOutcome mx = solve_milp_lex(problem, {negated});
        hi[j] = -mx.objective_values[0];
    }

    long long cells = 1;
    for (int j = 1; j < problem.k; ++j) {
        cells *= resolution;
        if (cells > 100000) throw LimitError("oracle grid exceeds the configured cell limit");
    }

    std::vector<Vec> found;
    std::vector<int> grid(problem.k - 1, 0);
    for (long long cell = 0; cell < cells; ++cell) {
        MomilpProblem constrained = problem;
        for (int j = 1; j < problem.k; ++j) {
            const Rational eps =
                resolution == 1 ? hi[j]
                                : lo[j] + (hi[j] - lo[j]) * Rational(grid[j - 1]) / Rational(resolution - 1);
            constrained.constraints.push_back({problem.objectives[j], Relation::LessEqual, eps});
        }
        const MilpOutcome sol = solve_milp_lex(constrained, problem.objectives);
        if (sol.status == MilpStatus::Optimal) {
            found.push_back(sol.objective_values);
        }
        for (int j = 0; j < problem.k - 1; ++j) {
            if (++grid[j] < resolution) break;
            grid[j] = 0;
        }
    }

    std::sort(found.begin(), found.end(), [](const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (std::size_t i = 0; i < found.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < found.size() && !dominated; ++j) {
            if (i != j && dominates_point(found[j], found[i])) dominated = true;
        }
        if (!dominated) out.points.push_back(found[i]);
    }
    // Self-consistency: the filtered list is an antichain.
    for (std::size_t i = 0; i < out.points.size(); ++i) {
        for (std::size_t j = 0; j < out.points.size(); ++j) {
            if (i != j && dominates_point(out.points[i], out.points[j])) {
                throw PipelineError("oracle produced a dominated point after filtering");
            }
        }
    }
    return out;
}

FrontCheckReport check_front(const ParetoFront& front, const OracleFront& oracle, int samples,
                             unsigned long long seed) {
    if (front.k != oracle.k) throw InputError("check_front: objective count mismatch");
    FrontCheckReport report;
    for (const auto& p : oracle.points) {
        if (!region_contains(front, p)) report.misses.push_back(p);
    }

    if (front.regions.empty() || samples <= 0) return report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> weight(0, 16);
    int produced = 0;
    int attempts = 0;
    const int max_attempts = samples * 8;
    while (produced < samples && attempts < max_attempts) {
        ++attempts;
        const auto& region = front.regions[static_cast<std::size_t>(attempts) % front.regions.size()];
        const auto& verts = region.base.vertices;
        Vec coeffs(verts.size());
        Rational total = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            coeffs[i] = Rational(weight(rng));
            total += coeffs[i];
        }
        if (total == 0) {
            coeffs[0] = 1;
            total = 1;
        }
        Vec sample(front.k, 0);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (int c = 0; c < front.k; ++c) sample[c] += coeffs[i] * verts[i][c] / total;
        }
        if (!region_contains(front, sample)) continue; // landed on a removed part
        ++produced;
        for (const auto& p : oracle.points) {
            if (dominates_point(p, sample)) {
                report.false_claims.push_back({sample, p});
                break;
            }
        }
    }
    return report;
}

} // namespace momilp
