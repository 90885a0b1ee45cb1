#pragma once

#include <optional>
#include <vector>

#include "toralpha/divisor.hpp"
#include "toralpha/polytope.hpp"
#include "toralpha/symmetry.hpp"

namespace toralpha {

// Log canonical threshold: an exact positive rational or +infinity, with a
// witness of the extremal (polytope vertex, ray) pair when finite.
struct LctValue {
    bool infinite = false;
    Rat value;  // meaningful when finite
    RatVector witness_vertex;
    int witness_ray = -1;

    static LctValue infinity() { return LctValue{true, Rat(0), RatVector(), -1}; }
};

struct AlphaResult {
    Rat alpha;
    RatVector minimizing_point;
    std::vector<std::pair<RatVector, LctValue>> per_vertex_table;
};

// Newton body of the linear system spanned by the sections at lattice points
// p_j in level m: conv{p_j / m}.  When a divisor is supplied, each p_j must
// lie in m*P_D.
VPolytope newton_body_of_sections(const std::vector<IntVector>& points, const Int& level,
                                  const ToricDivisor* D = nullptr);

// lct of the point metric h_p for nef and big D: both the per-vertex and the
// per-ray closed forms are evaluated and must agree;
//   1 / max_{v,rho} <p - v, u_rho>  =  1 / max_rho (<p, u_rho> + a_rho).
LctValue lct_point(const ToricDivisor& D, const RatVector& p);

// lct for a general polytope Newton body: 1 / max over vertices v of P_D of
// the minimax LP  min_lambda max_rho <sum lambda_j q_j - v, u_rho>.
// +infinity when the outer max is <= 0 (locally bounded metric).
LctValue lct_newton_body(const ToricDivisor& D, const VPolytope& body);

// Boundary point of P_{-K} on the half-line {-t p : t >= 0}.
RatVector w_point(const ToricDivisor& anticanonical_divisor, const RatVector& p);

// Point case on the anticanonical bundle: the Euclidean ratio
// |w_p| / (|w_p| + |p|) collapses to s*/(s*+1) with w_p = -s* p, so no norm
// is ever materialized.  Cross-checked against lct_point on every call.
LctValue lct_anticanonical_point(const Fan& fan, const RatVector& p);

// alpha invariant of a G-invariant nef and big divisor: minimum of lct_point
// over the vertices of the G-fixed part of P_D (1/lct is convex in p, so the
// infimum over rational fixed points is attained at a vertex).
AlphaResult alpha(const ToricDivisor& D, const SymmetryGroup& G);

// Closed form for the anticanonical bundle: 1 if only 0 is fixed, else
// 1/(1+T) with T = max over nonzero fixed vertices of max_rho <p, u_rho>.
// Asserted equal to alpha(-K, G) on every call.
Rat alpha_fano(const Fan& fan, const SymmetryGroup& G);

// Greatest lower bound on Ricci curvature: lct of the point metric at the
// barycenter of P_{-K}.
Rat glb_ricci(const Fan& fan);

// Independent oracle for alpha: minimum of lct_point over all points of the
// G-fixed part of P_D whose coordinates (in the fixed-subspace chart) have
// denominator at most denominator_cap.  Always >= alpha, with equality once
// the grid contains the minimizing vertex.
struct GridOracleResult {
    Rat min_lct;
    RatVector argmin;
    size_t points_checked = 0;
};
GridOracleResult grid_oracle_min(const ToricDivisor& D, const SymmetryGroup& G,
                                 const Int& denominator_cap);

}  // namespace toralpha
