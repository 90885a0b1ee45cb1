#pragma once

#include <vector>

#include "toralpha/divisor.hpp"
#include "toralpha/fan.hpp"
#include "toralpha/polytope.hpp"

namespace toralpha {

// Unimodular map of N carrying the fan to itself, with the ray permutation
// it induces: matrix * u_rho = u_{perm[rho]}.
struct LatticeAutomorphism {
    IntMatrix matrix;
    std::vector<int> ray_permutation;
};

// Finite group of fan automorphisms; always contains the identity and is
// closed under composition (verified on construction paths).  Elements are
// sorted by ray permutation for deterministic serialization.
struct SymmetryGroup {
    std::vector<LatticeAutomorphism> elements;
    size_t order() const { return elements.size(); }
};

// The full Weyl group: all lattice automorphisms preserving the fan.
// Candidates are anchored at one reference maximal cone.
SymmetryGroup automorphism_group(const Fan& fan);

// Close the given matrices under composition, verifying each element maps
// rays to rays and cones to cones.  Throws InvarianceError on bad input.
SymmetryGroup validate_subgroup(const Fan& fan, const std::vector<IntMatrix>& matrices);

// a_{g.rho} = a_rho for all g, rho: necessary for a T_G-linearization.
bool is_divisor_invariant(const ToricDivisor& D, const SymmetryGroup& G);

// Basis (columns) of the subspace of M fixed by G; g acts on characters by
// the inverse transpose, so the fixed set is cut out by g^T m = m.
RatMatrix fixed_character_subspace(const SymmetryGroup& G, int dimension);

// Vertices of P intersected with the fixed character subspace, mapped back
// to ambient coordinates and sorted.
VPolytope fixed_polytope(const RationalPolytope& P, const SymmetryGroup& G);

}  // namespace toralpha
