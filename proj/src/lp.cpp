#include "toralpha/lp.hpp"

#include <cassert>
#include <vector>

#include "toralpha/errors.hpp"

namespace toralpha {

namespace {

constexpr int kMaxVariables = 64;
constexpr int kMaxConstraints = 256;

// Full-tableau simplex state in standard form: minimize c.x, T.x = b, x >= 0.
struct Tableau {
    RatMatrix body;           // m x (cols+1), last column is the rhs
    RatVector cost;           // reduced-cost row, size cols
    Rat objective;            // negated running objective value
    std::vector<int> basis;   // basic column per row

    Eigen::Index rows() const { return body.rows(); }
    Eigen::Index cols() const { return body.cols() - 1; }

    void pivot(Eigen::Index row, Eigen::Index col) {
        const Rat inv = Rat(1) / body(row, col);
        body.row(row) *= inv;
        for (Eigen::Index i = 0; i < rows(); ++i) {
            if (i == row || body(i, col) == 0) continue;
            body.row(i) -= body(i, col) * body.row(row);
        }
        if (cost(col) != 0) {
            const Rat f = cost(col);
            for (Eigen::Index j = 0; j < cols(); ++j) cost(j) -= f * body(row, j);
            objective -= f * body(row, cols());
        }
        basis[static_cast<size_t>(row)] = static_cast<int>(col);
    }

    // Bland's rule: entering = lowest-index negative reduced cost; leaving =
    // min ratio, ties broken by lowest basic variable index.  Columns with
    // blocked[j] set never enter.  Returns false at optimality; throws on
    // unboundedness via the out flag.
    bool step(const std::vector<bool>& blocked, bool& unbounded) {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < cols(); ++j) {
            if (!blocked[static_cast<size_t>(j)] && cost(j) < 0) { enter = j; break; }
        }
        if (enter < 0) return false;
        Eigen::Index leave = -1;
        Rat best_ratio;
        for (Eigen::Index i = 0; i < rows(); ++i) {
            if (body(i, enter) <= 0) continue;
            const Rat ratio = body(i, cols()) / body(i, enter);
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[static_cast<size_t>(i)] <
                                            basis[static_cast<size_t>(leave)])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) { unbounded = true; return false; }
        pivot(leave, enter);
        return true;
    }
};

}  // namespace

LpSolution solve(const LinearProgram& lp) {
    const Eigen::Index k = lp.objective.size();
    if (static_cast<size_t>(k) != lp.nonnegative.size())
        throw ContractError("lp: nonnegativity flag count mismatch");
    if (k > kMaxVariables) throw CapacityError("lp: too many variables");
    if (lp.constraints.size() > kMaxConstraints)
        throw CapacityError("lp: too many constraints");
    for (const auto& c : lp.constraints) {
        if (c.coeffs.size() != k) throw ContractError("lp: constraint size mismatch");
    }

    // Column layout: split/plain variables, then surplus, then artificials.
    // Free variable i becomes x_i+ - x_i-.
    std::vector<Eigen::Index> var_col(static_cast<size_t>(k));
    Eigen::Index ncol = 0;
    for (Eigen::Index i = 0; i < k; ++i) {
        var_col[static_cast<size_t>(i)] = ncol;
        ncol += lp.nonnegative[static_cast<size_t>(i)] ? 1 : 2;
    }
    const Eigen::Index m = static_cast<Eigen::Index>(lp.constraints.size());
    Eigen::Index n_surplus = 0;
    for (const auto& c : lp.constraints)
        if (c.relation == Relation::GreaterEqual) ++n_surplus;
    const Eigen::Index surplus0 = ncol;
    const Eigen::Index art0 = ncol + n_surplus;
    const Eigen::Index total = art0 + m;

    Tableau t;
    t.body = RatMatrix::Zero(m, total + 1);
    t.cost = RatVector::Zero(total);
    t.objective = Rat(0);
    t.basis.resize(static_cast<size_t>(m));

    Eigen::Index next_surplus = surplus0;
    for (Eigen::Index r = 0; r < m; ++r) {
        const auto& c = lp.constraints[static_cast<size_t>(r)];
        for (Eigen::Index i = 0; i < k; ++i) {
            const Eigen::Index col = var_col[static_cast<size_t>(i)];
            t.body(r, col) = c.coeffs(i);
            if (!lp.nonnegative[static_cast<size_t>(i)]) t.body(r, col + 1) = -c.coeffs(i);
        }
        t.body(r, total) = c.rhs;
        if (c.relation == Relation::GreaterEqual) t.body(r, next_surplus++) = Rat(-1);
        if (t.body(r, total) < 0) t.body.row(r) *= Rat(-1);
        t.body(r, art0 + r) = Rat(1);
        t.basis[static_cast<size_t>(r)] = static_cast<int>(art0 + r);
    }

    // Phase 1: minimize the sum of artificials.
    for (Eigen::Index j = art0; j < total; ++j) t.cost(j) = Rat(1);
    for (Eigen::Index r = 0; r < m; ++r) {
        for (Eigen::Index j = 0; j < total; ++j) t.cost(j) -= t.body(r, j);
        t.objective -= t.body(r, total);
    }
    std::vector<bool> blocked(static_cast<size_t>(total), false);
    bool unbounded = false;
    while (t.step(blocked, unbounded)) {}
    if (unbounded) throw ContractError("lp: phase-1 objective cannot be unbounded");
    if (-t.objective != 0) {
        return LpSolution{LpStatus::Infeasible, Rat(0), RatVector()};
    }

    // Drive any leftover zero-level artificials out of the basis; a row with
    // no eligible pivot is redundant and gets zeroed.
    std::vector<Eigen::Index> live_rows;
    for (Eigen::Index r = 0; r < m; ++r) {
        if (t.basis[static_cast<size_t>(r)] >= art0) {
            Eigen::Index col = -1;
            for (Eigen::Index j = 0; j < art0; ++j) {
                if (t.body(r, j) != 0) { col = j; break; }
            }
            if (col >= 0) t.pivot(r, col);
        }
        if (t.basis[static_cast<size_t>(r)] < art0) live_rows.push_back(r);
    }

    // Phase 2: original objective; artificials are barred from re-entering
    // but stay in the tableau so the dual multipliers can be read off.
    for (Eigen::Index j = art0; j < total; ++j) blocked[static_cast<size_t>(j)] = true;
    t.cost = RatVector::Zero(total);
    t.objective = Rat(0);
    for (Eigen::Index i = 0; i < k; ++i) {
        const Eigen::Index col = var_col[static_cast<size_t>(i)];
        t.cost(col) = lp.objective(i);
        if (!lp.nonnegative[static_cast<size_t>(i)]) t.cost(col + 1) = -lp.objective(i);
    }
    for (Eigen::Index r : live_rows) {
        const Eigen::Index b = t.basis[static_cast<size_t>(r)];
        if (t.cost(b) != 0) {
            const Rat f = t.cost(b);
            for (Eigen::Index j = 0; j < total; ++j) t.cost(j) -= f * t.body(r, j);
            t.objective -= f * t.body(r, total);
        }
    }
    unbounded = false;
    while (t.step(blocked, unbounded)) {}
    if (unbounded) {
        return LpSolution{LpStatus::Unbounded, Rat(0), RatVector()};
    }

    // Recover the point in user variables.
    RatVector std_point = RatVector::Zero(total);
    for (Eigen::Index r = 0; r < m; ++r) {
        std_point(t.basis[static_cast<size_t>(r)]) = t.body(r, total);
    }
    RatVector point(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const Eigen::Index col = var_col[static_cast<size_t>(i)];
        point(i) = lp.nonnegative[static_cast<size_t>(i)]
                       ? std_point(col)
                       : Rat(std_point(col) - std_point(col + 1));
    }
    const Rat value = -t.objective;

    // Exact certification: primal feasibility, value consistency, and the
    // dual certificate read from the artificial columns (y_r = -cost(art_r)
    // up to the sign flips applied to rows with negative rhs; reduced costs
    // being nonnegative on unblocked columns is Bland's stopping condition).
    if (dot(lp.objective, point) != value)
        throw ContractError("lp: objective/value certificate failed");
    for (const auto& c : lp.constraints) {
        const Rat lhs = dot(c.coeffs, point);
        const bool ok = c.relation == Relation::Equal ? lhs == c.rhs : lhs >= c.rhs;
        if (!ok) throw ContractError("lp: primal feasibility certificate failed");
    }
    for (Eigen::Index j = 0; j < art0; ++j) {
        if (t.cost(j) < 0) throw ContractError("lp: dual certificate failed");
    }

    return LpSolution{LpStatus::Optimal, value, point};
}

bool feasible(const LinearProgram& lp) {
    LinearProgram probe = lp;
    probe.objective = RatVector::Zero(lp.objective.size());
    return solve(probe).status == LpStatus::Optimal;
}

}  // namespace toralpha
