#pragma once

#include <vector>

#include "toralpha/rational.hpp"

namespace toralpha {

enum class Relation { GreaterEqual, Equal };

struct Constraint {
    RatVector coeffs;
    Relation relation = Relation::GreaterEqual;
    Rat rhs;
};

// Minimization LP over k variables.  Variables flagged nonnegative are
// x_i >= 0; the rest are free (encoded internally as differences of
// nonnegative pairs).
struct LinearProgram {
    RatVector objective;
    std::vector<Constraint> constraints;
    std::vector<bool> nonnegative;  // one flag per variable
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rat value;
    RatVector point;
};

// Exact two-phase simplex with Bland's rule.  Every optimal solve is
// certified internally: nonnegative reduced costs plus value = y^T b for
// the dual multipliers read off the final tableau.
LpSolution solve(const LinearProgram& lp);

// Convenience: is the constraint system feasible at all?
bool feasible(const LinearProgram& lp);

}  // namespace toralpha
