#pragma once

#include <optional>
#include <vector>

#include "toralpha/rational.hpp"

namespace toralpha {

// Unique solution of A·x = b for square invertible A; absent when A is
// singular (callers never need the consistent-singular case).
std::optional<RatVector> solve_linear(const RatMatrix& A, const RatVector& b);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& A);

// gcd of the absolute values of all k×k minors of a k×n matrix, k ≤ n.
// Rows must be linearly independent over Q.
Int minor_gcd(const IntMatrix& A);

// Basis of {x : A·x = 0} in reduced echelon form; empty when the kernel is {0}.
std::vector<RatVector> rational_kernel(const RatMatrix& A);

// Rank over Q by Gaussian elimination.
int rational_rank(const RatMatrix& A);

// Dimension of the affine hull of a point set (-1 for the empty set).
int affine_dimension(const std::vector<RatVector>& points);

}  // namespace toralpha
