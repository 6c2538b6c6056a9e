#include "momilp/phase1.hpp"

#include <algorithm>
#include <map>

#include "momilp/errors.hpp"

namespace momilp {

CandidateSet collect_exhaustive(const MomilpProblem& problem, long long slice_limit) {
    problem.validate();
    CandidateSet out;
    out.k = problem.k;
    out.strategy = CollectStrategy::Exhaustive;
    int next_id = 0;
    for (const auto& slice : enumerate_slices(problem, slice_limit)) {
        std::vector<FrontPiece> faces;
        try {
            faces = nondominated_faces(compute_upper_image(problem, slice));
        } catch (const SliceInfeasibleError&) {
            continue;
        }
        out.discovered_slices.insert(slice);
        for (auto& piece : faces) {
            piece.piece_id = next_id++;
            out.pieces.push_back(std::move(piece));
        }
    }
    return out;
}

namespace {

// p lies beyond vertex v when it improves on v somewhere without being
// dominated by v: the signal that v's slice may hide further optimal faces.
bool beyond_vertex(const Vec& p, const Vec& v) {
    bool improves = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < v[i]) {
            improves = true;
            break;
        }
    }
    return improves && !dominates_point(v, p);
}

} // namespace

CandidateSet collect_milp_driven(const MomilpProblem& problem, long long slice_limit) {
    problem.validate();
    CandidateSet out;
    out.k = problem.k;
    out.strategy = CollectStrategy::MilpDriven;

    std::vector<Vec> rotations_base = problem.objectives;
    std::vector<std::vector<Vec>> rotations;
    for (int r = 0; r < problem.k; ++r) {
        std::vector<Vec> rot;
        for (int j = 0; j < problem.k; ++j) rot.push_back(rotations_base[(r + j) % problem.k]);
        rotations.push_back(std::move(rot));
    }

    std::vector<HammingCut> cuts;
    std::map<Slice, std::vector<FrontPiece>> faces_by_slice;
    struct KnownVertex {
        Vec point;
        Slice slice;
    };
    std::vector<KnownVertex> known_vertices;
    int next_id = 0;
    long long iterations = 0;

    while (true) {
        if (++iterations > slice_limit + 1) {
            throw LimitError("slice discovery exceeded the configured limit");
        }
        const auto& rotation = rotations[static_cast<std::size_t>((iterations - 1) % problem.k)];
        const MilpOutcome sol = solve_milp_lex(problem, rotation, cuts);
        if (sol.status == MilpStatus::Infeasible) break;

        const Slice slice = sol.slice;
        if (out.discovered_slices.count(slice)) {
            throw PipelineError("hamming cut failed to exclude a processed slice");
        }
        Vec p(problem.k);
        for (int j = 0; j < problem.k; ++j) p[j] = dot(problem.objectives[j], sol.point);

        // Audit step: a point beyond a known vertex re-opens that vertex's
        // slice; all of its optimal faces must already be recorded.
        for (const auto& kv : known_vertices) {
            if (!beyond_vertex(p, kv.point)) continue;
            const auto& known_faces = faces_by_slice.at(kv.slice);
            const auto fresh = nondominated_faces(compute_upper_image(problem, kv.slice));
            for (const auto& face : fresh) {
                if (!face.polytope.contains(kv.point)) continue;
                const bool recorded =
                    std::any_of(known_faces.begin(), known_faces.end(),
                                [&](const FrontPiece& known) { return known.polytope == face.polytope; });
                if (!recorded) {
                    throw PipelineError("slice re-examination found an unrecorded optimal face");
                }
            }
        }

        out.discovered_slices.insert(slice);
        auto faces = nondominated_faces(compute_upper_image(problem, slice));
        for (auto& piece : faces) {
            piece.piece_id = next_id++;
            for (const auto& v : piece.polytope.vertices) known_vertices.push_back({v, slice});
            out.pieces.push_back(piece);
        }
        faces_by_slice.emplace(slice, std::move(faces));
        cuts.push_back(HammingCut{slice});
    }
    return out;
}

} // namespace momilp
