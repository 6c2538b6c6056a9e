#include "momilp/slice_image.hpp"

#include <algorithm>
#include <map>

#include "momilp/errors.hpp"

namespace momilp {

UpperImage compute_upper_image(const MomilpProblem& problem, const Slice& slice) {
    problem.validate();
    const auto int_idx = problem.primary_integer_indices();
    if (slice.values.size() != int_idx.size()) {
        throw InputError("compute_upper_image: slice does not match the integer variables");
    }

    LinearProgram slice_lp = make_slice_lp(problem, slice);
    {
        const LpOutcome feas = solve_lp(slice_lp);
        if (feas.status == LpStatus::Infeasible) {
            throw SliceInfeasibleError("slice has no feasible continuous completion");
        }
    }
    for (int j = 0; j < problem.k; ++j) {
        LinearProgram lp = slice_lp;
        lp.objective = problem.objectives[j];
        if (solve_lp(lp).status == LpStatus::Unbounded) {
            throw PipelineError("objective " + std::to_string(j + 1) + " is unbounded below on a slice");
        }
    }

    // Continuous coordinates first, then the k image coordinates.
    std::map<int, long long> fixed;
    for (std::size_t i = 0; i < int_idx.size(); ++i) fixed[int_idx[i]] = slice.values[i];
    std::vector<int> cont;
    for (int j = 0; j < problem.num_primary_vars; ++j) {
        if (!problem.variables[j].integer) cont.push_back(j);
    }
    const int m = static_cast<int>(cont.size());
    const int dim = m + problem.k;

    std::vector<HalfSpace> rows;
    auto add_row = [&](const Vec& coeffs, Relation rel, Rational rhs) {
        Vec normal(dim, 0);
        for (int c = 0; c < m; ++c) normal[c] = coeffs[cont[c]];
        for (const auto& [var, val] : fixed) rhs -= coeffs[var] * Rational(val);
        if (rel == Relation::LessEqual || rel == Relation::Equal) {
            rows.push_back(HalfSpace(normal, rhs));
        }
        if (rel == Relation::GreaterEqual || rel == Relation::Equal) {
            Vec neg(dim, 0);
            for (int c = 0; c < m; ++c) neg[c] = -normal[c];
            rows.push_back(HalfSpace(std::move(neg), -rhs));
        }
    };
    for (const auto& con : problem.constraints) add_row(con.coeffs, con.rel, con.rhs);
    for (int c = 0; c < m; ++c) {
        const auto& v = problem.variables[cont[c]];
        if (v.lower) {
            Vec normal(dim, 0);
            normal[c] = -1;
            rows.push_back(HalfSpace(std::move(normal), -*v.lower));
        }
        if (v.upper) {
            Vec normal(dim, 0);
            normal[c] = 1;
            rows.push_back(HalfSpace(std::move(normal), *v.upper));
        }
    }
    // f_j(x) <= y_j.
    for (int j = 0; j < problem.k; ++j) {
        Vec normal(dim, 0);
        Rational rhs = 0;
        for (int c = 0; c < m; ++c) normal[c] = problem.objectives[j][cont[c]];
        for (const auto& [var, val] : fixed) rhs -= problem.objectives[j][var] * Rational(val);
        normal[m + j] = -1;
        rows.push_back(HalfSpace(std::move(normal), rhs));
    }

    std::set<int> drop;
    for (int c = 0; c < m; ++c) drop.insert(c);
    if (!drop.empty()) rows = fourier_motzkin_project(std::move(rows), dim, drop);

    UpperImage image;
    image.slice = slice;
    image.polyhedron = Polytope::from_halfspaces(rows, problem.k);
    if (image.polyhedron.is_empty()) {
        throw PipelineError("slice image unexpectedly empty after projection");
    }
    return image;
}

std::vector<FrontPiece> nondominated_faces(const UpperImage& image) {
    const Polytope& poly = image.polyhedron;
    const int k = poly.dim;
    const auto& facets = poly.halfspaces;
    const int m = static_cast<int>(facets.size());
    for (const auto& h : facets) {
        for (const auto& c : h.normal) {
            if (c > 0) throw InputError("nondominated_faces: not an upper image");
        }
    }

    struct Candidate {
        Polytope face;
        std::vector<int> active;
    };
    std::vector<Candidate> candidates;

    auto face_of_subset = [&](const std::vector<int>& subset) {
        std::vector<HalfSpace> rows = facets;
        for (int i : subset) {
            rows.push_back(facets[i].complement());
        }
        return Polytope::from_halfspaces(rows, k);
    };
    auto active_set = [&](const Polytope& face) {
        std::vector<int> active;
        for (int i = 0; i < m; ++i) {
            bool all_tight = true;
            for (const auto& v : face.vertices) {
                if (facets[i].eval(v) != facets[i].offset) {
                    all_tight = false;
                    break;
                }
            }
            if (all_tight) active.push_back(i);
        }
        return active;
    };

    // Faces of codimension up to k are reachable through subsets of at most
    // k facets; larger subsets repeat faces already seen.
    auto visit = [&](const std::vector<int>& s) {
        Polytope face = face_of_subset(s);
        if (face.is_empty()) return;
        for (const auto& c : candidates) {
            if (c.face == face) return;
        }
        candidates.push_back({std::move(face), {}});
        candidates.back().active = active_set(candidates.back().face);
    };
    std::vector<int> idx;
    auto recurse = [&](auto&& self, int start, int remaining) -> void {
        if (!idx.empty()) visit(idx);
        if (remaining == 0) return;
        for (int i = start; i < m; ++i) {
            idx.push_back(i);
            self(self, i + 1, remaining - 1);
            idx.pop_back();
        }
    };
    recurse(recurse, 0, std::min(k, m));

    // A face is nondominated iff some convex combination of its active
    // facets' outward weights is strictly positive.
    auto passes = [&](const std::vector<int>& active) {
        if (active.empty()) return false;
        const int n = static_cast<int>(active.size());
        LinearProgram lp;
        lp.objective.assign(n, 0);
        lp.bounds.assign(n, VarBounds{});
        for (int i = 0; i < n; ++i) lp.bounds[i].lower = Rational(0);
        for (int c = 0; c < k; ++c) {
            Vec row(n, 0);
            for (int i = 0; i < n; ++i) row[i] = -facets[active[i]].normal[c];
            lp.constraints.push_back({std::move(row), Relation::GreaterEqual, Rational(1)});
        }
        return solve_lp(lp).status == LpStatus::Optimal;
    };

    std::vector<Polytope> passing;
    for (const auto& c : candidates) {
        if (passes(c.active)) passing.push_back(c.face);
    }
    std::vector<FrontPiece> out;
    for (const auto& f : passing) {
        bool maximal = true;
        for (const auto& g : passing) {
            if (&f != &g && !(f == g) && f.subset_of(g)) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        if (!f.is_bounded()) {
            throw PipelineError("strictly supported face is unbounded; image must be bounded below");
        }
        FrontPiece piece;
        piece.polytope = f;
        piece.slice = image.slice;
        out.push_back(std::move(piece));
    }
    std::sort(out.begin(), out.end(), [](const FrontPiece& a, const FrontPiece& b) {
        if (a.polytope.vertices != b.polytope.vertices) {
            return std::lexicographical_compare(
                a.polytope.vertices.begin(), a.polytope.vertices.end(), b.polytope.vertices.begin(),
                b.polytope.vertices.end(),
                [](const Vec& x, const Vec& y) { return lex_compare(x, y) < 0; });
        }
        return false;
    });
    return out;
}

} // namespace momilp
