#include "momilp/phase3.hpp"

#include "momilp/errors.hpp"

namespace momilp {

std::optional<Polytope> mark_dominated(const CarvedPiece& p, const CarvedPiece& q) {
    const Polytope shadow = minkowski_sum_orthant(p.polytope);
    Polytope r = intersect(q.polytope, shadow);
    if (r.is_empty()) return std::nullopt;
    if (r.subset_of(p.polytope)) return std::nullopt; // only shared boundary
    return r;
}

bool polytope_covered(const Polytope& base, const std::vector<Polytope>& covers) {
    if (base.is_empty()) return true;
    if (covers.empty()) return false;
    const Polytope& first = covers.front();
    if (base.subset_of(first)) return true;
    const std::vector<Polytope> rest(covers.begin() + 1, covers.end());
    // Points of base on `first` are covered; the parts strictly past its
    // facets must be covered by the rest.
    for (const auto& part : complement_split(base, first)) {
        if (!polytope_covered(part, rest)) return false;
    }
    return true;
}

ParetoFront assemble_front(const CarvedSet& carved) {
    ParetoFront front;
    front.k = carved.k;
    const auto& pieces = carved.pieces;

    std::vector<std::vector<Removal>> removals(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            if (i == j) continue;
            auto mark = mark_dominated(pieces[i], pieces[j]);
            if (!mark) continue;
            for (const auto& back : removals[i]) {
                if (back.generator_piece_id == pieces[j].piece_id) {
                    throw MutualDominanceError("pieces " + std::to_string(pieces[i].piece_id) + " and " +
                                               std::to_string(pieces[j].piece_id) +
                                               " mark each other; carving invariant violated");
                }
            }
            removals[j].push_back({std::move(*mark), pieces[i].polytope, pieces[i].piece_id});
        }
    }

    for (std::size_t j = 0; j < pieces.size(); ++j) {
        std::vector<Polytope> cover;
        cover.reserve(removals[j].size());
        for (const auto& r : removals[j]) cover.push_back(r.polytope);
        if (!cover.empty() && polytope_covered(pieces[j].polytope, cover)) continue;
        ParetoRegion region;
        region.base = pieces[j].polytope;
        region.removals = std::move(removals[j]);
        region.piece_id = pieces[j].piece_id;
        region.slice = pieces[j].slice;
        front.regions.push_back(std::move(region));
    }
    return front;
}

namespace {

// Is y strictly dominated by some point of the generator piece?
bool strictly_dominated_by(const Vec& y, const Polytope& generator) {
    const int d = generator.dim;
    LinearProgram lp;
    lp.objective.assign(d, 0);
    for (int i = 0; i < d; ++i) lp.objective[i] = 1; // minimise sum(p)
    lp.bounds.assign(d, VarBounds{});
    for (const auto& h : generator.halfspaces) {
        lp.constraints.push_back({h.normal, Relation::LessEqual, h.offset});
    }
    for (int i = 0; i < d; ++i) {
        Vec row(d, 0);
        row[i] = 1;
        lp.constraints.push_back({std::move(row), Relation::LessEqual, y[i]});
    }
    const LpOutcome out = solve_lp(lp);
    if (out.status == LpStatus::Infeasible) return false;
    if (out.status == LpStatus::Unbounded) return true;
    Rational total = 0;
    for (const auto& v : y) total += v;
    return out.value < total;
}

} // namespace

bool region_contains(const ParetoFront& front, const Vec& y) {
    if (static_cast<int>(y.size()) != front.k) throw InputError("region_contains: dimension mismatch");
    for (const auto& region : front.regions) {
        if (!region.base.contains(y)) continue;
        bool excluded = false;
        for (const auto& removal : region.removals) {
            if (removal.polytope.contains(y) && strictly_dominated_by(y, removal.generator)) {
                excluded = true;
                break;
            }
        }
        if (!excluded) return true;
    }
    return false;
}

} // namespace momilp
