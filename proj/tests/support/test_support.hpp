#ifndef MOMILP_TEST_SUPPORT_HPP
#define MOMILP_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "momilp/geometry.hpp"
#include "momilp/lp.hpp"

namespace momilp::test {

inline Rational rat(long long num, long long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline Vec vec2(const Rational& a, const Rational& b) { return Vec{a, b}; }
inline Vec vec2(long long a, long long b) { return Vec{Rational(a), Rational(b)}; }
inline Vec vec3(long long a, long long b, long long c) { return Vec{Rational(a), Rational(b), Rational(c)}; }

inline HalfSpace hs(Vec normal, Rational offset) { return HalfSpace(std::move(normal), std::move(offset)); }

/// Random rational with numerator in [-span, span] and denominator in [1, max_den].
inline Rational random_rational(std::mt19937_64& rng, int span = 9, int max_den = 4) {
    std::uniform_int_distribution<long long> num(-span, span);
    std::uniform_int_distribution<long long> den(1, max_den);
    return rat(num(rng), den(rng));
}

inline Vec random_point(std::mt19937_64& rng, int dim, int span = 9, int max_den = 4) {
    Vec v(dim);
    for (auto& x : v) x = random_rational(rng, span, max_den);
    return v;
}

/// Independent extreme-point oracle: v is extreme in `points` iff it is not
/// a convex combination of the others (exact LP feasibility).
inline bool is_extreme_point(const std::vector<Vec>& points, std::size_t idx) {
    const int d = static_cast<int>(points[idx].size());
    const int n = static_cast<int>(points.size());
    if (n == 1) return true;
    LinearProgram lp;
    lp.objective.assign(n - 1, 0);
    lp.bounds.assign(n - 1, VarBounds{});
    for (auto& b : lp.bounds) b.lower = Rational(0);
    for (int c = 0; c < d; ++c) {
        Vec row;
        for (int i = 0; i < n; ++i) {
            if (i == static_cast<int>(idx)) continue;
            row.push_back(points[i][c]);
        }
        lp.constraints.push_back({std::move(row), Relation::Equal, points[idx][c]});
    }
    Vec ones(n - 1, 1);
    lp.constraints.push_back({std::move(ones), Relation::Equal, Rational(1)});
    return solve_lp(lp).status == LpStatus::Infeasible;
}

/// Random interior-ish point of a polytope: a convex combination of its
/// vertices with random nonnegative weights.
inline Vec sample_in_polytope(const Polytope& p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> w(0, 16);
    Vec coeffs(p.vertices.size());
    Rational total = 0;
    for (auto& c : coeffs) {
        c = Rational(w(rng));
        total += c;
    }
    if (total == 0) {
        coeffs[0] = 1;
        total = 1;
    }
    Vec out(p.dim, 0);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        for (int c = 0; c < p.dim; ++c) out[c] += coeffs[i] * p.vertices[i][c] / total;
    }
    return out;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(MOMILP_FIXTURE_DIR) + "/" + name;
}

} // namespace momilp::test

#endif
