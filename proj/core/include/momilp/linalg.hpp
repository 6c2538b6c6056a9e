#ifndef MOMILP_LINALG_HPP
#define MOMILP_LINALG_HPP

#include <optional>
#include <vector>

#include "momilp/rational.hpp"

namespace momilp {

using Matrix = std::vector<Vec>;

Rational dot(const Vec& a, const Vec& b);

/// -1 / 0 / +1 for lexicographic order on equal-length vectors.
int lex_compare(const Vec& a, const Vec& b);

bool is_zero_vec(const Vec& v);

/// In-place reduced row echelon form. Returns the pivot column of each
/// pivot row; rank is the number of pivots.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

/// Canonical basis of the null space of `m` (read off the rref free
/// columns), each vector scaled so its first nonzero entry is +1.
Matrix kernel_basis(Matrix m, int cols);

/// Solve the square system `a x = b` exactly; nullopt when singular.
std::optional<Vec> solve_square(Matrix a, Vec b);

/// Component of `v` orthogonal to span(basis) under the standard inner
/// product. Basis vectors must be linearly independent.
Vec project_out(const Vec& v, const Matrix& basis);

/// Scale so the first nonzero entry has absolute value 1 (sign kept).
/// Zero vectors pass through unchanged.
Vec scale_first_nonzero_to_unit(Vec v);

} // namespace momilp

#endif
