#include "momilp/geometry.hpp"

#include <algorithm>

#include "momilp/errors.hpp"
#include "momilp/lp.hpp"

namespace momilp {

const char* to_string(DominanceRelation rel) {
    switch (rel) {
        case DominanceRelation::CompletelyDominates: return "CompletelyDominates";
        case DominanceRelation::PartiallyDominates: return "PartiallyDominates";
        case DominanceRelation::Incomparable: return "Incomparable";
        case DominanceRelation::DominatedBy: return "DominatedBy";
        case DominanceRelation::PartiallyDominatedBy: return "PartiallyDominatedBy";
    }
    return "?";
}

Polytope vrep_to_hrep(const std::vector<Vec>& vertices, const std::vector<Vec>& rays) {
    return Polytope::from_vertices(vertices, rays);
}

Polytope hrep_to_vrep(const std::vector<HalfSpace>& halfspaces, int ambient_dim) {
    return Polytope::from_halfspaces(halfspaces, ambient_dim);
}

Polytope intersect(const Polytope& p, const Polytope& q) {
    if (p.dim != q.dim) throw InputError("intersect: dimension mismatch");
    if (p.is_empty() || q.is_empty()) return Polytope::empty(p.dim);
    std::vector<HalfSpace> rows = p.halfspaces;
    rows.insert(rows.end(), q.halfspaces.begin(), q.halfspaces.end());
    return Polytope::from_halfspaces(rows, p.dim);
}

namespace {

// Exact redundancy filter: drop a row when maximising its normal over the
// remaining rows stays within its offset.
void lp_prune_rows(std::vector<HalfSpace>& rows, int d) {
    for (std::size_t i = 0; i < rows.size();) {
        if (rows.size() <= 1) break;
        LinearProgram lp;
        lp.objective.assign(d, 0);
        for (int j = 0; j < d; ++j) lp.objective[j] = -rows[i].normal[j];
        lp.bounds.assign(d, VarBounds{});
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == i) continue;
            lp.constraints.push_back({rows[r].normal, Relation::LessEqual, rows[r].offset});
        }
        const LpOutcome out = solve_lp(lp);
        if (out.status == LpStatus::Optimal && -out.value <= rows[i].offset) {
            rows.erase(rows.begin() + i);
        } else {
            ++i;
        }
    }
}

// Dedupe canonical rows; returns false when a 0 <= negative row shows the
// system is infeasible.
bool tidy_rows(std::vector<HalfSpace>& rows, bool& infeasible) {
    infeasible = false;
    std::vector<HalfSpace> out;
    out.reserve(rows.size());
    for (auto& h : rows) {
        if (is_zero_vec(h.normal)) {
            if (h.offset < 0) {
                infeasible = true;
                return false;
            }
            continue;
        }
        out.push_back(h.canonical());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // Same normal, different offsets: keep the tightest.
    std::vector<HalfSpace> tight;
    for (auto& h : out) {
        if (!tight.empty() && tight.back().normal == h.normal) continue; // sorted: smaller offset first
        tight.push_back(std::move(h));
    }
    rows = std::move(tight);
    return true;
}

std::vector<HalfSpace> infeasible_system(int d) {
    Vec e(d, 0);
    e[0] = 1;
    Vec ne(d, 0);
    ne[0] = -1;
    return {HalfSpace(e, Rational(0)), HalfSpace(ne, Rational(-1))};
}

} // namespace

std::vector<HalfSpace> fourier_motzkin_project(std::vector<HalfSpace> rows, int ambient_dim,
                                               const std::set<int>& drop_indices) {
    for (int j : drop_indices) {
        if (j < 0 || j >= ambient_dim) throw InputError("fourier_motzkin_project: index out of range");
    }
    // Highest index first keeps the remaining indices stable.
    std::vector<int> order(drop_indices.rbegin(), drop_indices.rend());
    int d = ambient_dim;
    for (int j : order) {
        std::vector<HalfSpace> kept, pos, neg;
        for (auto& h : rows) {
            if (h.normal[j] == 0) {
                kept.push_back(std::move(h));
            } else if (h.normal[j] > 0) {
                pos.push_back(std::move(h));
            } else {
                neg.push_back(std::move(h));
            }
        }
        for (const auto& hp : pos) {
            for (const auto& hn : neg) {
                const Rational wp = -hn.normal[j]; // > 0
                const Rational wn = hp.normal[j];  // > 0
                Vec normal(d, 0);
                for (int c = 0; c < d; ++c) normal[c] = wp * hp.normal[c] + wn * hn.normal[c];
                kept.push_back(HalfSpace(std::move(normal), wp * hp.offset + wn * hn.offset));
            }
        }
        for (auto& h : kept) h.normal.erase(h.normal.begin() + j);
        --d;
        bool infeasible = false;
        rows = std::move(kept);
        if (!tidy_rows(rows, infeasible)) return infeasible_system(d);
        if (rows.size() > 20) lp_prune_rows(rows, d);
    }
    return rows;
}

Polytope eliminate_variables(const Polytope& p, const std::set<int>& drop_indices) {
    for (int j : drop_indices) {
        if (j < 0 || j >= p.dim) throw InputError("eliminate_variables: index out of range");
    }
    if (static_cast<int>(drop_indices.size()) >= p.dim) {
        throw InputError("eliminate_variables: cannot drop every coordinate");
    }
    const int out_dim = p.dim - static_cast<int>(drop_indices.size());
    if (p.is_empty()) return Polytope::empty(out_dim);
    if (drop_indices.empty()) return p;
    auto rows = fourier_motzkin_project(p.halfspaces, p.dim, drop_indices);
    return Polytope::from_halfspaces(rows, out_dim);
}

Polytope minkowski_sum_orthant(const Polytope& p) {
    if (p.is_empty()) throw InputError("minkowski_sum_orthant: empty input");
    std::vector<Vec> rays = p.rays;
    for (int i = 0; i < p.dim; ++i) {
        Vec e(p.dim, 0);
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    return Polytope::from_vertices(p.vertices, rays);
}

bool dominates_point(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("dominates_point: length mismatch");
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

bool exists_strict_domination(const Polytope& p, const Polytope& q) {
    if (p.dim != q.dim) throw InputError("exists_strict_domination: dimension mismatch");
    if (p.is_empty() || q.is_empty()) return false;
    const int d = p.dim;
    // Variables (x, delta): x in P, x + delta in Q, delta >= 0.
    // Strict domination exists iff some feasible delta is nonzero.
    LinearProgram lp;
    lp.objective.assign(2 * d, 0);
    for (int i = 0; i < d; ++i) lp.objective[d + i] = -1; // maximise sum(delta)
    lp.bounds.assign(2 * d, VarBounds{});
    for (int i = 0; i < d; ++i) lp.bounds[d + i].lower = Rational(0);
    for (const auto& h : p.halfspaces) {
        Vec row(2 * d, 0);
        for (int i = 0; i < d; ++i) row[i] = h.normal[i];
        lp.constraints.push_back({std::move(row), Relation::LessEqual, h.offset});
    }
    for (const auto& h : q.halfspaces) {
        Vec row(2 * d, 0);
        for (int i = 0; i < d; ++i) {
            row[i] = h.normal[i];
            row[d + i] = h.normal[i];
        }
        lp.constraints.push_back({std::move(row), Relation::LessEqual, h.offset});
    }
    const LpOutcome out = solve_lp(lp);
    if (out.status == LpStatus::Unbounded) return true;
    return out.status == LpStatus::Optimal && out.value < 0;
}

DominanceRelation classify_polytope_dominance(const Polytope& p, const Polytope& q) {
    if (p.dim != q.dim) throw InputError("classify_polytope_dominance: dimension mismatch");
    if (p.is_empty() || q.is_empty()) throw InputError("classify_polytope_dominance: empty operand");
    const bool forward = exists_strict_domination(p, q);
    const bool backward = exists_strict_domination(q, p);
    if (forward && !backward) {
        return q.subset_of(minkowski_sum_orthant(p)) ? DominanceRelation::CompletelyDominates
                                                     : DominanceRelation::PartiallyDominates;
    }
    if (backward && !forward) {
        return p.subset_of(minkowski_sum_orthant(q)) ? DominanceRelation::DominatedBy
                                                     : DominanceRelation::PartiallyDominatedBy;
    }
    return DominanceRelation::Incomparable;
}

bool relative_interiors_intersect(const Polytope& p, const Polytope& q) {
    if (p.dim != q.dim) throw InputError("relative_interiors_intersect: dimension mismatch");
    if (p.is_empty() || q.is_empty()) return false;
    const int d = p.dim;
    // Variables (x, t), t <= 1: facet rows tightened by t, equality-pair rows
    // kept exact. relint(P) meets relint(Q) iff max t > 0.
    LinearProgram lp;
    lp.objective.assign(d + 1, 0);
    lp.objective[d] = -1;
    lp.bounds.assign(d + 1, VarBounds{});
    lp.bounds[d].upper = Rational(1);
    auto add_rows = [&](const Polytope& poly) {
        for (const auto& h : poly.halfspaces) {
            const HalfSpace opposite = h.complement().canonical();
            const bool equality_member =
                std::binary_search(poly.halfspaces.begin(), poly.halfspaces.end(), opposite);
            Vec row(d + 1, 0);
            for (int i = 0; i < d; ++i) row[i] = h.normal[i];
            if (!equality_member) row[d] = 1;
            lp.constraints.push_back({std::move(row), Relation::LessEqual, h.offset});
        }
    };
    add_rows(p);
    add_rows(q);
    const LpOutcome out = solve_lp(lp);
    return out.status == LpStatus::Optimal && out.value < 0;
}

} // namespace momilp
