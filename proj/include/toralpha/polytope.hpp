#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toralpha/rational.hpp"

namespace toralpha {

// One inequality <normal, m> >= offset.
struct Halfspace {
    IntVector normal;
    Rat offset;
};

// H-representation polytope with an on-demand exact vertex list.
class RationalPolytope {
public:
    RationalPolytope(int dimension, std::vector<Halfspace> hrep)
        : dimension_(dimension), hrep_(std::move(hrep)) {}

    int dimension() const { return dimension_; }
    const std::vector<Halfspace>& hrep() const { return hrep_; }

    // Exact vertex set, deduplicated and lexicographically sorted.  Empty for
    // an infeasible system; throws DomainError when the feasible set is
    // unbounded; CapacityError beyond the desk-scale limits (dim 6 / 32
    // inequalities).  Returned by value so it stays valid past temporaries.
    std::vector<RatVector> vertices() const;

    bool contains(const RatVector& m, bool strict = false) const;

private:
    int dimension_;
    std::vector<Halfspace> hrep_;
    mutable std::optional<std::vector<RatVector>> vertex_cache_;
};

// Point set in M_R, not necessarily vertices (Newton bodies stay in V-rep).
struct VPolytope {
    std::vector<RatVector> points;
};

// Substitute m = B·s (columns of B a basis of a linear subspace) into the
// inequalities of P; the result lives in s-coordinates.  Vertices map back
// through m = B·s.
RationalPolytope intersect_with_subspace(const RationalPolytope& P, const RatMatrix& B);

// Exact Euclidean volume and barycenter of a bounded polytope that is
// full-dimensional in the ambient space, via a pulling triangulation fanned
// from vertices()[apex].  Any apex gives the same answer; exposing the
// choice lets tests cross-check triangulation independence.
std::pair<Rat, RatVector> volume_and_barycenter(const RationalPolytope& P, size_t apex = 0);

// Is m a convex combination of the given points?  (LP feasibility.)
bool in_convex_hull(const std::vector<RatVector>& points, const RatVector& m);

}  // namespace toralpha
