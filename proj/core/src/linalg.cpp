#include "momilp/linalg.hpp"

#include "momilp/errors.hpp"

namespace momilp {

Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw InputError("dot: length mismatch");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

int lex_compare(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw InputError("lex_compare: length mismatch");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivot_cols;
    if (m.empty()) return pivot_cols;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        const Rational inv = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

int rank(Matrix m) {
    return static_cast<int>(rref(m).size());
}

Matrix kernel_basis(Matrix m, int cols) {
    if (m.empty()) {
        Matrix basis;
        for (int c = 0; c < cols; ++c) {
            Vec e(cols, 0);
            e[c] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    Matrix basis;
    for (int free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v(cols, 0);
        v[free_c] = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            v[pivots[p]] = -m[p][free_c];
        }
        basis.push_back(scale_first_nonzero_to_unit(std::move(v)));
    }
    return basis;
}

std::optional<Vec> solve_square(Matrix a, Vec b) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
    const auto pivots = rref(a);
    if (static_cast<int>(pivots.size()) != n) return std::nullopt;
    Vec x(n, 0);
    for (int i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
    return x;
}

Vec project_out(const Vec& v, const Matrix& basis) {
    if (basis.empty()) return v;
    const int k = static_cast<int>(basis.size());
    Matrix gram(k, Vec(k, 0));
    Vec rhs(k, 0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
        rhs[i] = dot(basis[i], v);
    }
    auto coeff = solve_square(std::move(gram), std::move(rhs));
    if (!coeff) {
        throw InputError("project_out: basis is not linearly independent");
    }
    Vec out = v;
    for (int i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[j] -= (*coeff)[i] * basis[i][j];
        }
    }
    return out;
}

Vec scale_first_nonzero_to_unit(Vec v) {
    for (const auto& x : v) {
        if (x != 0) {
            const Rational s = abs(x);
            for (auto& y : v) y /= s;
            return v;
        }
    }
    return v;
}

} // namespace momilp
