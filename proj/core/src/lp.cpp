#include "momilp/lp.hpp"

#include <cassert>

#include "momilp/errors.hpp"
#include "momilp/linalg.hpp"

namespace momilp {

void LinearProgram::validate() const {
    const std::size_t n = objective.size();
    if (n == 0) throw InputError("linear program with no variables");
    if (bounds.size() != n) throw InputError("bounds length mismatch");
    for (const auto& row : constraints) {
        if (row.coeffs.size() != n) throw InputError("constraint row length mismatch");
    }
}

namespace {

// x_original = base + sign * x[col0]   (Shift / Negate)
// x_original = x[col0] - x[col1]       (Split)
struct VarMap {
    enum Kind { Shift, Negate, Split } kind = Shift;
    int col0 = -1;
    int col1 = -1;
    Rational base;
};

// min c . x  s.t.  A x = b, x >= 0, with b >= 0; artificial columns appended
// after the n_struct structural+slack columns, one per row.
struct StandardForm {
    Matrix a;
    Vec b;
    Vec c;
    int n_struct = 0;
    std::vector<VarMap> var_maps;
};

StandardForm build_standard_form(const LinearProgram& lp) {
    lp.validate();
    const int n = lp.num_vars();

    StandardForm sf;
    sf.var_maps.resize(n);
    int cols = 0;
    for (int j = 0; j < n; ++j) {
        const auto& bd = lp.bounds[j];
        auto& vm = sf.var_maps[j];
        if (bd.lower) {
            vm.kind = VarMap::Shift;
            vm.base = *bd.lower;
            vm.col0 = cols++;
        } else if (bd.upper) {
            vm.kind = VarMap::Negate;
            vm.base = *bd.upper;
            vm.col0 = cols++;
        } else {
            vm.kind = VarMap::Split;
            vm.col0 = cols++;
            vm.col1 = cols++;
        }
    }

    struct Row {
        Vec coeffs;
        Relation rel;
        Rational rhs;
    };
    std::vector<Row> rows;
    auto transform_row = [&](const Vec& coeffs, Relation rel, const Rational& rhs) {
        Row r;
        r.coeffs.assign(cols, 0);
        r.rel = rel;
        r.rhs = rhs;
        for (int j = 0; j < n; ++j) {
            if (coeffs[j] == 0) continue;
            const auto& vm = sf.var_maps[j];
            switch (vm.kind) {
                case VarMap::Shift:
                    r.coeffs[vm.col0] += coeffs[j];
                    r.rhs -= coeffs[j] * vm.base;
                    break;
                case VarMap::Negate:
                    r.coeffs[vm.col0] -= coeffs[j];
                    r.rhs -= coeffs[j] * vm.base;
                    break;
                case VarMap::Split:
                    r.coeffs[vm.col0] += coeffs[j];
                    r.coeffs[vm.col1] -= coeffs[j];
                    break;
            }
        }
        rows.push_back(std::move(r));
    };

    for (const auto& con : lp.constraints) {
        transform_row(con.coeffs, con.rel, con.rhs);
    }
    // Two-sided bounds become one extra row on the shifted variable.
    for (int j = 0; j < n; ++j) {
        const auto& bd = lp.bounds[j];
        if (bd.lower && bd.upper) {
            Row r;
            r.coeffs.assign(cols, 0);
            r.coeffs[sf.var_maps[j].col0] = 1;
            r.rel = Relation::LessEqual;
            r.rhs = *bd.upper - *bd.lower;
            rows.push_back(std::move(r));
        }
    }

    // Normalise >= to <=, add slacks, force b >= 0.
    int n_slacks = 0;
    for (auto& r : rows) {
        if (r.rel == Relation::GreaterEqual) {
            for (auto& x : r.coeffs) x = -x;
            r.rhs = -r.rhs;
            r.rel = Relation::LessEqual;
        }
        if (r.rel == Relation::LessEqual) ++n_slacks;
    }
    const int m = static_cast<int>(rows.size());
    sf.n_struct = cols + n_slacks;
    sf.a.assign(m, Vec(sf.n_struct, 0));
    sf.b.assign(m, 0);
    int slack = cols;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < cols; ++j) sf.a[i][j] = rows[i].coeffs[j];
        if (rows[i].rel == Relation::LessEqual) sf.a[i][slack++] = 1;
        sf.b[i] = rows[i].rhs;
        if (sf.b[i] < 0) {
            for (auto& x : sf.a[i]) x = -x;
            sf.b[i] = -sf.b[i];
        }
    }

    sf.c.assign(sf.n_struct, 0);
    for (int j = 0; j < n; ++j) {
        const auto& vm = sf.var_maps[j];
        const Rational& cj = lp.objective[j];
        if (cj == 0) continue;
        switch (vm.kind) {
            case VarMap::Shift: sf.c[vm.col0] += cj; break;
            case VarMap::Negate: sf.c[vm.col0] -= cj; break;
            case VarMap::Split:
                sf.c[vm.col0] += cj;
                sf.c[vm.col1] -= cj;
                break;
        }
    }
    return sf;
}

// Dense tableau with the artificial columns kept around: the artificial
// block is B^{-1} at every step, which makes dual extraction direct.
struct Tableau {
    Matrix t;                // m x (n_total + 1), last column is b
    std::vector<int> basis;  // basic column per row
    int n_struct;
    int n_total;

    int rows() const { return static_cast<int>(t.size()); }

    void pivot(int row, int col) {
        const Rational p = t[row][col];
        for (auto& x : t[row]) x /= p;
        for (int i = 0; i < rows(); ++i) {
            if (i == row || t[i][col] == 0) continue;
            const Rational f = t[i][col];
            for (int j = 0; j <= n_total; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    // Bland's rule over columns allowed by `enterable`; returns false at optimality.
    // Throws nothing; reports unboundedness via the out-parameter.
    bool step(const Vec& cost, const std::vector<bool>& enterable, bool& unbounded) {
        const int m = rows();
        Vec y(m, 0); // multipliers of current basis: y_r = cost[basis[r]]
        for (int r = 0; r < m; ++r) y[r] = cost[basis[r]];
        int enter = -1;
        for (int j = 0; j < n_total; ++j) {
            if (!enterable[j]) continue;
            Rational rc = cost[j];
            for (int r = 0; r < m; ++r) {
                if (t[r][j] != 0) rc -= y[r] * t[r][j];
            }
            if (rc < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return false;
        int leave = -1;
        Rational best;
        for (int r = 0; r < m; ++r) {
            if (t[r][enter] <= 0) continue;
            const Rational ratio = t[r][n_total] / t[r][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) {
            unbounded = true;
            return false;
        }
        pivot(leave, enter);
        unbounded = false;
        return true;
    }
};

struct SimplexResult {
    LpStatus status = LpStatus::Infeasible;
    Vec x;     // structural solution, length n_struct
    Vec duals; // per standard-form row
};

SimplexResult run_simplex(const StandardForm& sf) {
    const int m = static_cast<int>(sf.a.size());
    const int n = sf.n_struct;

    Tableau tb;
    tb.n_struct = n;
    tb.n_total = n + m;
    tb.t.assign(m, Vec(n + m + 1, 0));
    tb.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) tb.t[i][j] = sf.a[i][j];
        tb.t[i][n + i] = 1;
        tb.t[i][n + m] = sf.b[i];
        tb.basis[i] = n + i;
    }

    SimplexResult res;

    // Phase 1: minimise the artificial sum.
    {
        Vec cost(n + m, 0);
        for (int j = n; j < n + m; ++j) cost[j] = 1;
        std::vector<bool> enterable(n + m, true);
        bool unbounded = false;
        while (tb.step(cost, enterable, unbounded)) {
        }
        Rational infeas = 0;
        for (int r = 0; r < tb.rows(); ++r) {
            if (tb.basis[r] >= n) infeas += tb.t[r][tb.n_total];
        }
        if (infeas != 0) {
            res.status = LpStatus::Infeasible;
            return res;
        }
    }

    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (int r = tb.rows() - 1; r >= 0; --r) {
        if (tb.basis[r] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j) {
            if (tb.t[r][j] != 0) {
                col = j;
                break;
            }
        }
        if (col >= 0) {
            tb.pivot(r, col);
        } else {
            tb.t.erase(tb.t.begin() + r);
            tb.basis.erase(tb.basis.begin() + r);
        }
    }

    // Phase 2.
    {
        Vec cost(tb.n_total, 0);
        for (int j = 0; j < n; ++j) cost[j] = sf.c[j];
        std::vector<bool> enterable(tb.n_total, false);
        for (int j = 0; j < n; ++j) enterable[j] = true;
        bool unbounded = false;
        while (tb.step(cost, enterable, unbounded)) {
        }
        if (unbounded) {
            res.status = LpStatus::Unbounded;
            return res;
        }
        res.status = LpStatus::Optimal;
        res.x.assign(n, 0);
        for (int r = 0; r < tb.rows(); ++r) {
            if (tb.basis[r] < n) res.x[tb.basis[r]] = tb.t[r][tb.n_total];
        }
        // y = c_B B^{-1}; the artificial block holds B^{-1} column by column.
        res.duals.assign(m, 0);
        for (int i = 0; i < m; ++i) {
            Rational y = 0;
            for (int r = 0; r < tb.rows(); ++r) {
                if (tb.basis[r] < n && tb.t[r][n + i] != 0) {
                    y += sf.c[tb.basis[r]] * tb.t[r][n + i];
                }
            }
            res.duals[i] = y;
        }
    }
    return res;
}

Vec recover_point(const StandardForm& sf, const Vec& x_struct, int n_vars) {
    Vec x(n_vars, 0);
    for (int j = 0; j < n_vars; ++j) {
        const auto& vm = sf.var_maps[j];
        switch (vm.kind) {
            case VarMap::Shift: x[j] = vm.base + x_struct[vm.col0]; break;
            case VarMap::Negate: x[j] = vm.base - x_struct[vm.col0]; break;
            case VarMap::Split: x[j] = x_struct[vm.col0] - x_struct[vm.col1]; break;
        }
    }
    return x;
}

} // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
    const StandardForm sf = build_standard_form(lp);
    const SimplexResult sr = run_simplex(sf);
    LpOutcome out;
    out.status = sr.status;
    if (sr.status == LpStatus::Optimal) {
        out.point = recover_point(sf, sr.x, lp.num_vars());
        out.value = dot(lp.objective, out.point);
        out.duals = sr.duals;
    }
    return out;
}

LpOutcome solve_lexicographic(LinearProgram lp, const std::vector<Vec>& objectives) {
    if (objectives.empty()) throw InputError("solve_lexicographic: no objectives");
    LpOutcome out;
    for (std::size_t stage = 0; stage < objectives.size(); ++stage) {
        lp.objective = objectives[stage];
        out = solve_lp(lp);
        if (out.status != LpStatus::Optimal) return out;
        lp.constraints.push_back({objectives[stage], Relation::Equal, out.value});
    }
    out.value = dot(objectives[0], out.point);
    return out;
}

bool verify_lp_certificate(const LinearProgram& lp, const LpOutcome& outcome) {
    if (outcome.status != LpStatus::Optimal) return false;
    if (static_cast<int>(outcome.point.size()) != lp.num_vars()) return false;

    const StandardForm sf = build_standard_form(lp);
    const int m = static_cast<int>(sf.a.size());
    if (static_cast<int>(outcome.duals.size()) != m) return false;

    // Map the reported point into standard-form coordinates.
    Vec xs(sf.n_struct, 0);
    for (int j = 0; j < lp.num_vars(); ++j) {
        const auto& vm = sf.var_maps[j];
        const Rational& xj = outcome.point[j];
        switch (vm.kind) {
            case VarMap::Shift: xs[vm.col0] = xj - vm.base; break;
            case VarMap::Negate: xs[vm.col0] = vm.base - xj; break;
            case VarMap::Split:
                if (xj >= 0) {
                    xs[vm.col0] = xj;
                } else {
                    xs[vm.col1] = -xj;
                }
                break;
        }
    }
    // Slacks absorb the row residuals; recompute them.
    int slack_col = -1;
    {
        int cols = 0;
        for (const auto& vm : sf.var_maps) cols = std::max(cols, std::max(vm.col0, vm.col1) + 1);
        slack_col = cols;
    }
    for (int i = 0; i < m; ++i) {
        Rational lhs = 0;
        for (int j = 0; j < slack_col; ++j) {
            if (sf.a[i][j] != 0) lhs += sf.a[i][j] * xs[j];
        }
        bool has_slack = false;
        int sc = -1;
        for (int j = slack_col; j < sf.n_struct; ++j) {
            if (sf.a[i][j] != 0) {
                has_slack = true;
                sc = j;
                break;
            }
        }
        if (has_slack) {
            xs[sc] = (sf.b[i] - lhs) / sf.a[i][sc];
            if (xs[sc] < 0) return false; // primal infeasible
        } else if (lhs != sf.b[i]) {
            return false;
        }
    }
    for (const auto& v : xs) {
        if (v < 0) return false;
    }
    // Dual feasibility: reduced costs c - A^T y >= 0 on every column.
    for (int j = 0; j < sf.n_struct; ++j) {
        Rational rc = sf.c[j];
        for (int i = 0; i < m; ++i) {
            if (sf.a[i][j] != 0) rc -= outcome.duals[i] * sf.a[i][j];
        }
        if (rc < 0) return false;
    }
    // Strong duality: y . b equals the standard-form objective at xs.
    Rational primal = dot(sf.c, xs);
    Rational dual = dot(outcome.duals, sf.b);
    if (primal != dual) return false;
    // And the reported value matches the original objective.
    return outcome.value == dot(lp.objective, outcome.point);
}

} // namespace momilp
