#pragma once

#include <vector>

#include "toralpha/fan.hpp"
#include "toralpha/polytope.hpp"

namespace toralpha {

// Torus-invariant divisor D = sum a_rho D_rho; the support function obeys
// g(u_rho) = -a_rho and P_D = {m : <m, u_rho> >= -a_rho}.
struct ToricDivisor {
    const Fan* fan = nullptr;
    std::vector<Int> coefficients;  // one per ray, fan ray order
};

ToricDivisor anticanonical(const Fan& fan);

// Per-maximal-cone slopes v_sigma with <v_sigma, u_rho> = -a_rho on the
// cone's rays.  Requires a smooth complete validated fan.
std::vector<RatVector> support_function(const ToricDivisor& D);

// Piecewise-linear evaluation g(x) = <v_sigma, x> on a cone containing x.
Rat support_value(const ToricDivisor& D, const std::vector<RatVector>& slopes,
                  const RatVector& x);

RationalPolytope polytope_of(const ToricDivisor& D);

struct NefResult {
    bool nef = true;
    int violating_cone = -1;
    int violating_ray = -1;
};

// Concavity of the support function: <v_sigma, u_rho> >= -a_rho everywhere.
NefResult is_nef(const ToricDivisor& D);

// P_D full-dimensional.
bool is_big(const ToricDivisor& D);

// Nef with pairwise distinct slopes.
bool is_ample(const ToricDivisor& D);

// conv{v_sigma} for nef D; as a set of vertices this equals those of P_D.
VPolytope batyrev_tschinkel_newton_body(const ToricDivisor& D);

}  // namespace toralpha
