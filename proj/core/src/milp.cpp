#include "momilp/milp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "momilp/errors.hpp"
#include "momilp/linalg.hpp"

namespace momilp {

long long Variable::int_lower() const {
    return rational_floor(*lower).convert_to<long long>();
}

long long Variable::int_upper() const {
    return rational_floor(*upper).convert_to<long long>();
}

std::vector<int> MomilpProblem::integer_indices() const {
    std::vector<int> out;
    for (int i = 0; i < num_vars(); ++i) {
        if (variables[i].integer) out.push_back(i);
    }
    return out;
}

std::vector<int> MomilpProblem::primary_integer_indices() const {
    std::vector<int> out;
    for (int i = 0; i < num_primary_vars; ++i) {
        if (variables[i].integer) out.push_back(i);
    }
    return out;
}

void MomilpProblem::validate() const {
    if (k < 2) throw InputError("problem needs at least two objectives");
    if (static_cast<int>(objectives.size()) != k) throw InputError("objective row count mismatch");
    if (num_primary_vars < 1 || num_primary_vars > num_vars()) {
        throw InputError("invalid primary variable count");
    }
    for (const auto& row : objectives) {
        if (static_cast<int>(row.size()) != num_vars()) throw InputError("objective row length mismatch");
    }
    for (const auto& con : constraints) {
        if (static_cast<int>(con.coeffs.size()) != num_vars()) throw InputError("constraint row length mismatch");
    }
    for (const auto& v : variables) {
        if (v.integer) {
            if (!v.lower || !v.upper) throw InputError("integer variable '" + v.name + "' requires finite bounds");
            if (!is_integer(*v.lower) || !is_integer(*v.upper)) {
                throw InputError("integer variable '" + v.name + "' has non-integral bounds");
            }
        }
        if (v.lower && v.upper && *v.lower > *v.upper) {
            throw InputError("variable '" + v.name + "' has crossed bounds");
        }
    }
}

int hamming_distance(const std::vector<long long>& a, const std::vector<long long>& b) {
    if (a.size() != b.size()) throw InputError("hamming_distance: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) ++d;
    }
    return d;
}

namespace {

void pad_rows(MomilpProblem& p, int new_vars) {
    for (auto& row : p.objectives) row.resize(p.num_vars() + new_vars, Rational(0));
    for (auto& con : p.constraints) con.coeffs.resize(p.num_vars() + new_vars, Rational(0));
}

} // namespace

MomilpProblem add_hamming_cut(const MomilpProblem& problem, const HammingCut& cut) {
    const auto int_idx = problem.primary_integer_indices();
    if (cut.reference.values.size() != int_idx.size()) {
        throw InputError("hamming cut reference does not match the integer variables");
    }
    for (std::size_t i = 0; i < int_idx.size(); ++i) {
        const auto& v = problem.variables[int_idx[i]];
        const long long val = cut.reference.values[i];
        if (val < v.int_lower() || val > v.int_upper()) {
            throw InputError("hamming cut reference out of bounds for '" + v.name + "'");
        }
    }

    MomilpProblem out = problem;

    bool all_binary = true;
    for (int j : int_idx) {
        if (problem.variables[j].int_lower() != 0 || problem.variables[j].int_upper() != 1) {
            all_binary = false;
            break;
        }
    }

    if (all_binary) {
        // sum_{ref=0} x + sum_{ref=1} (1 - x) >= 1
        Constraint row;
        row.coeffs.assign(out.num_vars(), 0);
        row.rel = Relation::GreaterEqual;
        Rational rhs = 1;
        for (std::size_t i = 0; i < int_idx.size(); ++i) {
            if (cut.reference.values[i] == 0) {
                row.coeffs[int_idx[i]] = 1;
            } else {
                row.coeffs[int_idx[i]] = -1;
                rhs -= 1;
            }
        }
        row.rhs = rhs;
        out.constraints.push_back(std::move(row));
        return out;
    }

    // General integers: indicator binaries u (deviate up), v (deviate down)
    // per non-fixed variable, big-M = variable range.
    struct Aux {
        int var;      // primary variable index
        long long ref;
        int u = -1, v = -1;
    };
    std::vector<Aux> auxes;
    int new_cols = 0;
    for (std::size_t i = 0; i < int_idx.size(); ++i) {
        const auto& vv = problem.variables[int_idx[i]];
        if (vv.int_upper() - vv.int_lower() == 0) continue; // pinned, cannot deviate
        Aux a;
        a.var = int_idx[i];
        a.ref = cut.reference.values[i];
        a.u = out.num_vars() + new_cols++;
        a.v = out.num_vars() + new_cols++;
        auxes.push_back(a);
    }
    if (auxes.empty()) {
        // Every integer variable is pinned to the reference: the cut leaves
        // no integer assignment, so the model becomes infeasible.
        Constraint row;
        row.coeffs.assign(out.num_vars(), 0);
        row.rel = Relation::GreaterEqual;
        row.rhs = 1;
        out.constraints.push_back(std::move(row));
        return out;
    }

    pad_rows(out, new_cols);
    const int cut_id = out.num_vars() - problem.num_primary_vars;
    for (const auto& a : auxes) {
        const std::string base =
            "__cut" + std::to_string(cut_id) + "_" + problem.variables[a.var].name;
        out.variables.push_back({base + "_up", true, Rational(0), Rational(1)});
        out.variables.push_back({base + "_dn", true, Rational(0), Rational(1)});
    }

    const int width = static_cast<int>(problem.num_vars()) + new_cols;
    Constraint any_dev;
    any_dev.coeffs.assign(width, 0);
    any_dev.rel = Relation::GreaterEqual;
    any_dev.rhs = 1;
    for (const auto& a : auxes) {
        const auto& vv = problem.variables[a.var];
        const Rational m = *vv.upper - *vv.lower;

        Constraint up; // x - (1+M) u >= ref - M
        up.coeffs.assign(width, 0);
        up.coeffs[a.var] = 1;
        up.coeffs[a.u] = -(m + 1);
        up.rel = Relation::GreaterEqual;
        up.rhs = Rational(a.ref) - m;
        out.constraints.push_back(std::move(up));

        Constraint down; // x + (1+M) v <= ref + M
        down.coeffs.assign(width, 0);
        down.coeffs[a.var] = 1;
        down.coeffs[a.v] = m + 1;
        down.rel = Relation::LessEqual;
        down.rhs = Rational(a.ref) + m;
        out.constraints.push_back(std::move(down));

        Constraint one_dir; // u + v <= 1
        one_dir.coeffs.assign(width, 0);
        one_dir.coeffs[a.u] = 1;
        one_dir.coeffs[a.v] = 1;
        one_dir.rel = Relation::LessEqual;
        one_dir.rhs = 1;
        out.constraints.push_back(std::move(one_dir));

        any_dev.coeffs[a.u] = 1;
        any_dev.coeffs[a.v] = 1;
    }
    out.constraints.push_back(std::move(any_dev));
    return out;
}

LinearProgram make_slice_lp(const MomilpProblem& problem, const Slice& slice) {
    const auto int_idx = problem.primary_integer_indices();
    if (slice.values.size() != int_idx.size()) {
        throw InputError("slice does not match the integer variables");
    }
    LinearProgram lp;
    lp.objective.assign(problem.num_vars(), 0);
    lp.constraints = problem.constraints;
    lp.bounds.resize(problem.num_vars());
    for (int j = 0; j < problem.num_vars(); ++j) {
        lp.bounds[j].lower = problem.variables[j].lower;
        lp.bounds[j].upper = problem.variables[j].upper;
    }
    for (std::size_t i = 0; i < int_idx.size(); ++i) {
        lp.bounds[int_idx[i]].lower = Rational(slice.values[i]);
        lp.bounds[int_idx[i]].upper = Rational(slice.values[i]);
    }
    return lp;
}

std::vector<Slice> enumerate_slices(const MomilpProblem& problem, long long limit) {
    const auto int_idx = problem.primary_integer_indices();
    long long count = 1;
    for (int j : int_idx) {
        const auto& v = problem.variables[j];
        const long long range = v.int_upper() - v.int_lower() + 1;
        if (range <= 0) return {};
        count *= range;
        if (count > limit) {
            throw LimitError("slice count exceeds the configured limit of " + std::to_string(limit));
        }
    }
    std::vector<Slice> out;
    out.reserve(static_cast<std::size_t>(count));
    Slice cur;
    cur.values.resize(int_idx.size());
    for (std::size_t i = 0; i < int_idx.size(); ++i) {
        cur.values[i] = problem.variables[int_idx[i]].int_lower();
    }
    while (true) {
        out.push_back(cur);
        int pos = static_cast<int>(int_idx.size()) - 1;
        while (pos >= 0) {
            if (cur.values[pos] < problem.variables[int_idx[pos]].int_upper()) {
                ++cur.values[pos];
                break;
            }
            cur.values[pos] = problem.variables[int_idx[pos]].int_lower();
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

namespace {

struct Node {
    std::vector<Rational> lower; // per integer variable (all of them)
    std::vector<Rational> upper;
    long id = 0;
};

Vec pad_objective(const Vec& row, int width) {
    Vec out = row;
    if (static_cast<int>(out.size()) > width) throw InputError("objective row longer than variable count");
    out.resize(width, Rational(0));
    return out;
}

} // namespace

MilpOutcome solve_milp_lex(const MomilpProblem& problem, const std::vector<Vec>& objectives,
                           const std::vector<HammingCut>& cuts) {
    problem.validate();
    if (objectives.empty()) throw InputError("solve_milp_lex: no objectives");

    MomilpProblem model = problem;
    for (const auto& cut : cuts) model = add_hamming_cut(model, cut);

    std::vector<Vec> objs;
    objs.reserve(objectives.size());
    for (const auto& row : objectives) objs.push_back(pad_objective(row, model.num_vars()));

    const auto int_idx = model.integer_indices();

    LinearProgram base;
    base.objective.assign(model.num_vars(), 0);
    base.constraints = model.constraints;
    base.bounds.resize(model.num_vars());
    for (int j = 0; j < model.num_vars(); ++j) {
        base.bounds[j].lower = model.variables[j].lower;
        base.bounds[j].upper = model.variables[j].upper;
    }

    struct Incumbent {
        bool found = false;
        Vec objective_values;
        Vec point;
    } incumbent;

    std::vector<Node> nodes;
    // Best-first on the first objective's relaxation bound, FIFO on ties.
    std::set<std::pair<std::pair<Rational, long>, std::size_t>> queue;
    long next_id = 0;

    auto push_node = [&](Node node, const Rational& priority) {
        node.id = next_id++;
        nodes.push_back(std::move(node));
        queue.insert({{priority, nodes.back().id}, nodes.size() - 1});
    };

    Node root;
    root.lower.reserve(int_idx.size());
    root.upper.reserve(int_idx.size());
    for (int j : int_idx) {
        root.lower.push_back(*model.variables[j].lower);
        root.upper.push_back(*model.variables[j].upper);
    }
    push_node(std::move(root), Rational(0));

    while (!queue.empty()) {
        const auto it = queue.begin();
        const std::size_t node_pos = it->second;
        queue.erase(it);
        const Node node = nodes[node_pos];

        LinearProgram lp = base;
        for (std::size_t i = 0; i < int_idx.size(); ++i) {
            lp.bounds[int_idx[i]].lower = node.lower[i];
            lp.bounds[int_idx[i]].upper = node.upper[i];
            if (node.lower[i] > node.upper[i]) goto skip_node;
        }
        {
            const LpOutcome relax = solve_lexicographic(lp, objs);
            if (relax.status == LpStatus::Infeasible) goto skip_node;
            if (relax.status == LpStatus::Unbounded) {
                throw PipelineError("lexicographic relaxation is unbounded; objective images must be bounded");
            }
            Vec bound(objs.size());
            for (std::size_t s = 0; s < objs.size(); ++s) bound[s] = dot(objs[s], relax.point);
            if (incumbent.found && lex_compare(bound, incumbent.objective_values) >= 0) goto skip_node;

            // Most-fractional integer variable, ties to the lowest index.
            int branch_var = -1;
            Rational branch_score = 0;
            for (std::size_t i = 0; i < int_idx.size(); ++i) {
                const Rational& x = relax.point[int_idx[i]];
                if (is_integer(x)) continue;
                const Rational fl = Rational(rational_floor(x));
                const Rational frac = x - fl;
                const Rational score = frac <= Rational(1, 2) ? frac : 1 - frac;
                if (branch_var < 0 || score > branch_score) {
                    branch_var = static_cast<int>(i);
                    branch_score = score;
                }
            }
            if (branch_var < 0) {
                incumbent.found = true;
                incumbent.objective_values = std::move(bound);
                incumbent.point = relax.point;
                goto skip_node;
            }
            const Rational fl = Rational(rational_floor(relax.point[int_idx[branch_var]]));
            Node down = node;
            down.upper[branch_var] = fl;
            Node up = node;
            up.lower[branch_var] = fl + 1;
            push_node(std::move(down), bound[0]);
            push_node(std::move(up), bound[0]);
        }
    skip_node:;
    }

    MilpOutcome out;
    if (!incumbent.found) {
        out.status = MilpStatus::Infeasible;
        return out;
    }
    out.status = MilpStatus::Optimal;
    out.objective_values = incumbent.objective_values;
    out.point.assign(incumbent.point.begin(), incumbent.point.begin() + problem.num_primary_vars);
    for (int j : problem.primary_integer_indices()) {
        out.slice.values.push_back(rational_floor(incumbent.point[j]).convert_to<long long>());
    }
    return out;
}

} // namespace momilp
