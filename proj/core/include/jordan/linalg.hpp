#pragma once

#include <vector>

#include "jordan/matrix.hpp"

namespace jordan {

using Vector = std::vector<Scalar>;

// Kernel basis by elimination on unit (nonzero rational) pivots. Each basis
// vector has a 1 at its free coordinate and 0 at the other free coordinates.
// Throws Unsupported when the remaining block has no unit pivot but is nonzero.
std::vector<Vector> nullspace(const Matrix& m);

// Rank over Q(z) by fraction-free elimination. Entries must be rational
// polynomials (no radicals).
std::size_t rank(const Matrix& m);
std::size_t rank_of_columns(const std::vector<Vector>& columns);
// Determinant over Q[z] (square, rational polynomial entries).
ZPolynomial determinant(const Matrix& m);

// Inverse of a unitriangular matrix (upper or lower) by back-substitution;
// otherwise Gauss-Jordan on unit pivots. SingularR when neither applies.
Matrix inverse(const Matrix& m);

Matrix from_columns(const std::vector<Vector>& columns);

}  // namespace jordan
