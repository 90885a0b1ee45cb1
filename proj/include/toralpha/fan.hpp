#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toralpha/rational.hpp"

namespace toralpha {

// A fan in N = Z^n: primitive ray generators plus maximal cones as sorted
// ray-index sets.  Ray order is authoritative for serialization; divisor
// coefficients and automorphism permutations refer to it.
struct Fan {
    int dimension = 0;
    std::vector<IntVector> rays;
    std::vector<std::vector<int>> max_cones;
};

struct Diagnostic {
    std::string message;
    std::vector<int> indices;
};

// Fan axioms for the accepted class (simplicial, full-dimensional maximal
// cones): ray primitivity, n rays per cone with independent generators, and
// pairwise intersections being common faces.  Empty list = valid.
std::vector<Diagnostic> validate_fan(const Fan& fan);

struct SmoothnessResult {
    bool smooth = true;
    int offending_cone = -1;
    Int det;
};

// Every maximal cone's ray matrix has |det| = 1.
SmoothnessResult is_smooth(const Fan& fan);

// Wall criterion: each (n-1)-face of a maximal cone lies in exactly two
// maximal cones and the wall-adjacency graph is connected.  Valid for pure
// simplicial fans; n = 1 requires rays (1) and (-1).
bool is_complete(const Fan& fan);

struct ConeLocation {
    int cone_index = -1;
    RatVector coefficients;  // nonnegative coordinates in the cone's ray basis
};

// Some maximal cone containing x, lowest cone index on ties (boundary points).
ConeLocation cone_containing(const Fan& fan, const RatVector& x);

// Ray matrix of a maximal cone, columns = rays in stored (sorted-index) order.
IntMatrix cone_ray_matrix(const Fan& fan, int cone_index);

}  // namespace toralpha
