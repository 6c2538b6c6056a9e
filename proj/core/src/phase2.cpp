#include "momilp/phase2.hpp"

#include <algorithm>
#include <set>

#include "momilp/errors.hpp"

namespace momilp {

std::vector<Polytope> complement_split(const Polytope& p, const Polytope& i) {
    std::vector<Polytope> parts;
    std::vector<HalfSpace> walked = p.halfspaces;
    for (const auto& h : i.halfspaces) {
        std::vector<HalfSpace> rows = walked;
        rows.push_back(h.complement());
        Polytope part = Polytope::from_halfspaces(rows, p.dim);
        walked.push_back(h);
        if (part.is_empty()) continue;
        bool strict = false;
        for (const auto& v : part.vertices) {
            if (h.eval(v) > h.offset) {
                strict = true;
                break;
            }
        }
        if (strict) parts.push_back(std::move(part));
    }
    return parts;
}

CarvedSet carve(const CandidateSet& candidates, int budget) {
    struct Working {
        Polytope polytope;
        Slice slice;
        int parent_piece_id;
        long uid;
    };
    std::vector<Working> work;
    long next_uid = 0;
    for (const auto& piece : candidates.pieces) {
        work.push_back({piece.polytope, piece.slice, piece.piece_id, next_uid++});
    }

    std::set<std::pair<long, long>> known_safe;
    int steps = 0;
    while (true) {
        int ci = -1, cj = -1;
        for (std::size_t i = 0; i < work.size() && ci < 0; ++i) {
            for (std::size_t j = i + 1; j < work.size(); ++j) {
                const auto key = std::minmax(work[i].uid, work[j].uid);
                if (known_safe.count({key.first, key.second})) continue;
                if (relative_interiors_intersect(work[i].polytope, work[j].polytope)) {
                    ci = static_cast<int>(i);
                    cj = static_cast<int>(j);
                    break;
                }
                known_safe.insert({key.first, key.second});
            }
        }
        if (ci < 0) break;
        if (++steps > budget) {
            throw LimitError("carving exceeded the step budget");
        }

        const Working p = work[ci];
        const Working q = work[cj];
        const Polytope overlap = intersect(p.polytope, q.polytope);

        std::vector<Working> replacements;
        replacements.push_back({overlap, p.slice, p.parent_piece_id, next_uid++});
        for (auto& part : complement_split(p.polytope, overlap)) {
            replacements.push_back({std::move(part), p.slice, p.parent_piece_id, next_uid++});
        }
        for (auto& part : complement_split(q.polytope, overlap)) {
            replacements.push_back({std::move(part), q.slice, q.parent_piece_id, next_uid++});
        }
        // Dedupe and drop replacement pieces swallowed by another piece.
        work.erase(work.begin() + cj);
        work.erase(work.begin() + ci);
        std::vector<Working> kept;
        for (std::size_t r = 0; r < replacements.size(); ++r) {
            const Polytope& cand = replacements[r].polytope;
            bool drop = false;
            for (std::size_t s = 0; s < replacements.size() && !drop; ++s) {
                if (s == r) continue;
                if (cand == replacements[s].polytope) {
                    if (s < r) drop = true; // keep the first of equals
                } else if (r > 0 && cand.subset_of(replacements[s].polytope)) {
                    drop = true; // r == 0 is the overlap piece, always kept
                }
            }
            for (std::size_t s = 0; s < work.size() && !drop; ++s) {
                if (r > 0 && cand.subset_of(work[s].polytope)) drop = true;
            }
            if (!drop) kept.push_back(std::move(replacements[r]));
        }
        work.insert(work.end(), std::make_move_iterator(kept.begin()), std::make_move_iterator(kept.end()));
    }

    CarvedSet out;
    out.k = candidates.k;
    out.pieces.reserve(work.size());
    int id = 0;
    for (auto& w : work) {
        out.pieces.push_back({std::move(w.polytope), std::move(w.slice), id++, w.parent_piece_id});
    }
    return out;
}

bool verify_disjoint(const std::vector<Polytope>& pieces) {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            if (relative_interiors_intersect(pieces[i], pieces[j])) return false;
        }
    }
    return true;
}

} // namespace momilp
