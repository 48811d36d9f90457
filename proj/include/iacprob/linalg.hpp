#pragma once

#include "iacprob/rational.hpp"

#include <optional>
#include <vector>

namespace iacprob {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row major

// Solves A x = b exactly. Returns the solution when it is unique, nullopt
// when the system is rank deficient or inconsistent ("no unique solution").
// A may have more rows than columns; extra rows must be consistent.
std::optional<RatVector> solve_linear_system(RatMatrix a, RatVector b);

// Determinant of a square matrix by fraction-free-ish Gaussian elimination.
Rational determinant(RatMatrix m);

int matrix_rank(RatMatrix m);

// Dimension of the affine hull of a point set (-1 for empty input).
int affine_rank(const std::vector<RatVector>& points);

}  // namespace iacprob
