#include "toralpha/invariant.hpp"

#include <algorithm>
#include <functional>

#include "toralpha/errors.hpp"
#include "toralpha/linalg.hpp"
#include "toralpha/lp.hpp"

namespace toralpha {

namespace {

void require_nef_big(const ToricDivisor& D) {
    if (!is_nef(D).nef) throw DomainError("divisor is not nef");
    if (!is_big(D)) throw DomainError("divisor is not big");
}

bool is_anticanonical(const ToricDivisor& D) {
    return std::all_of(D.coefficients.begin(), D.coefficients.end(),
                       [](const Int& a) { return a == 1; });
}

// Inner minimax LP of the Newton-body lct at one vertex v of P_D:
//   minimize t  s.t.  t - sum_j lambda_j <q_j, u_rho> >= -<v, u_rho>  for all rho,
//                     sum_j lambda_j = 1,  lambda >= 0.
Rat body_minimax(const ToricDivisor& D, const std::vector<RatVector>& body,
                 const RatVector& v) {
    const Eigen::Index k = static_cast<Eigen::Index>(body.size());
    LinearProgram lp;
    lp.objective = RatVector::Zero(k + 1);
    lp.objective(0) = Rat(1);  // t
    lp.nonnegative.assign(static_cast<size_t>(k) + 1, true);
    lp.nonnegative[0] = false;
    for (const auto& u : D.fan->rays) {
        RatVector row = RatVector::Zero(k + 1);
        row(0) = Rat(1);
        for (Eigen::Index j = 0; j < k; ++j) row(j + 1) = -dot(u, body[static_cast<size_t>(j)]);
        lp.constraints.push_back({row, Relation::GreaterEqual, -dot(u, v)});
    }
    RatVector simplex_row = RatVector::Ones(k + 1);
    simplex_row(0) = Rat(0);
    lp.constraints.push_back({simplex_row, Relation::Equal, Rat(1)});
    const auto sol = solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw ContractError("lct_newton_body: inner LP did not reach an optimum");
    return sol.value;
}

}  // namespace

VPolytope newton_body_of_sections(const std::vector<IntVector>& points, const Int& level,
                                  const ToricDivisor* D) {
    if (points.empty()) throw DomainError("newton_body_of_sections: no sections given");
    if (level < 1) throw DomainError("newton_body_of_sections: level must be >= 1");
    std::vector<RatVector> scaled;
    for (const auto& p : points) {
        RatVector q(p.size());
        for (Eigen::Index i = 0; i < p.size(); ++i) q(i) = Rat(p(i)) / Rat(level);
        scaled.push_back(std::move(q));
    }
    if (D) {
        const auto P = polytope_of(*D);
        for (size_t j = 0; j < scaled.size(); ++j) {
            if (!P.contains(scaled[j]))
                throw DomainError("section point " + std::to_string(j) +
                                  " lies outside level*P_L");
        }
    }
    return VPolytope{sorted_unique(std::move(scaled))};
}

LctValue lct_point(const ToricDivisor& D, const RatVector& p) {
    require_nef_big(D);
    const auto P = polytope_of(D);
    if (!P.contains(p)) throw DomainError("lct_point: point lies outside P_L");

    // Per-vertex route: max over (vertex, ray) of <p - v, u_rho>.
    Rat vertex_max;
    bool first = true;
    RatVector best_vertex;
    int best_ray = -1;
    for (const auto& v : P.vertices()) {
        for (size_t r = 0; r < D.fan->rays.size(); ++r) {
            const Rat val = dot(D.fan->rays[r], RatVector(p - v));
            if (first || val > vertex_max) {
                vertex_max = val;
                best_vertex = v;
                best_ray = static_cast<int>(r);
                first = false;
            }
        }
    }

    // Per-ray route: max over rays of <p, u_rho> + a_rho; nefness makes the
    // facet inequalities tight, so the two routes must agree exactly.
    Rat ray_max;
    bool rfirst = true;
    for (size_t r = 0; r < D.fan->rays.size(); ++r) {
        const Rat val = dot(D.fan->rays[r], p) + Rat(D.coefficients[r]);
        if (rfirst || val > ray_max) { ray_max = val; rfirst = false; }
    }
    if (vertex_max != ray_max)
        throw ContractError("lct_point: per-vertex and per-ray formulas disagree");

    if (vertex_max <= 0) return LctValue::infinity();
    return LctValue{false, Rat(1) / vertex_max, best_vertex, best_ray};
}

LctValue lct_newton_body(const ToricDivisor& D, const VPolytope& body) {
    require_nef_big(D);
    if (body.points.empty()) throw DomainError("lct_newton_body: empty Newton body");
    const auto P = polytope_of(D);
    for (const auto& q : body.points) {
        if (!P.contains(q)) throw DomainError("lct_newton_body: body point outside P_L");
    }
    Rat outer_max;
    bool first = true;
    RatVector best_vertex;
    for (const auto& v : P.vertices()) {
        const Rat val = body_minimax(D, body.points, v);
        if (first || val > outer_max) {
            outer_max = val;
            best_vertex = v;
            first = false;
        }
    }
    if (outer_max <= 0) return LctValue::infinity();
    // Witness ray: the ray maximizing <p* - v, u_rho> for the body point p*
    // closest in the LP is not tracked; re-derive from the per-ray gap at the
    // extremal vertex.
    int best_ray = -1;
    Rat ray_best;
    for (size_t r = 0; r < D.fan->rays.size(); ++r) {
        Rat inner_min;
        bool ifirst = true;
        for (const auto& q : body.points) {
            const Rat val = dot(D.fan->rays[r], RatVector(q - best_vertex));
            if (ifirst || val < inner_min) { inner_min = val; ifirst = false; }
        }
        if (best_ray < 0 || inner_min > ray_best) { ray_best = inner_min; best_ray = static_cast<int>(r); }
    }
    return LctValue{false, Rat(1) / outer_max, best_vertex, best_ray};
}

RatVector w_point(const ToricDivisor& anticanonical_divisor, const RatVector& p) {
    const ToricDivisor& D = anticanonical_divisor;
    if (!is_anticanonical(D)) throw DomainError("w_point: divisor is not anticanonical");
    bool zero = true;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (p(i) != 0) zero = false;
    if (zero) throw DomainError("w_point: p must be nonzero");
    Rat s_star;
    bool first = true;
    for (size_t r = 0; r < D.fan->rays.size(); ++r) {
        const Rat pairing = dot(D.fan->rays[r], p);
        if (pairing > 0) {
            const Rat s = Rat(D.coefficients[r]) / pairing;
            if (first || s < s_star) { s_star = s; first = false; }
        }
    }
    if (first) throw DomainError("w_point: half-line never leaves P (not bounded?)");
    return RatVector(-s_star * p);
}

LctValue lct_anticanonical_point(const Fan& fan, const RatVector& p) {
    const ToricDivisor mK = anticanonical(fan);
    bool zero = true;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (p(i) != 0) zero = false;
    if (zero) {
        // Newton body {0}: lct = 1.
        const auto direct = lct_point(mK, p);
        if (direct.infinite || direct.value != 1)
            throw ContractError("lct_anticanonical_point: origin must give 1");
        return direct;
    }
    const RatVector w = w_point(mK, p);
    // w_p = -s* p, so |w_p|/(|w_p|+|p|) = s*/(s*+1) with no square roots.
    Rat s_star;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) != 0) { s_star = -w(i) / p(i); break; }
    }
    const Rat ratio = s_star / (s_star + 1);
    const auto direct = lct_point(mK, p);
    if (direct.infinite || direct.value != ratio)
        throw ContractError("lct_anticanonical_point disagrees with the containment formula");
    return direct;
}

AlphaResult alpha(const ToricDivisor& D, const SymmetryGroup& G) {
    if (!is_divisor_invariant(D, G))
        throw InvarianceError("alpha: divisor coefficients are not G-invariant");
    require_nef_big(D);
    const auto P = polytope_of(D);
    const auto fixed = fixed_polytope(P, G);
    if (fixed.points.empty())
        throw DomainError("alpha: no G-invariant points in P_L");
    AlphaResult result;
    bool first = true;
    for (const auto& p : fixed.points) {
        const auto lct = lct_point(D, p);
        result.per_vertex_table.emplace_back(p, lct);
        if (lct.infinite) continue;  // defensively skipped; big D keeps lct finite
        // Ties resolve to the lex-greatest minimizer (points arrive sorted).
        if (first || lct.value <= result.alpha) {
            result.alpha = lct.value;
            result.minimizing_point = p;
            first = false;
        }
    }
    if (first) throw ContractError("alpha: no finite lct over the fixed polytope");
    return result;
}

Rat alpha_fano(const Fan& fan, const SymmetryGroup& G) {
    const ToricDivisor mK = anticanonical(fan);
    if (!is_big(mK)) throw DomainError("alpha_fano: anticanonical divisor is not big");
    const auto fixed = fixed_polytope(polytope_of(mK), G);
    Rat value;
    bool only_origin = true;
    Rat T(0);
    for (const auto& p : fixed.points) {
        bool zero = true;
        for (Eigen::Index i = 0; i < p.size(); ++i)
            if (p(i) != 0) zero = false;
        if (zero) continue;
        only_origin = false;
        Rat m;
        bool mfirst = true;
        for (const auto& u : fan.rays) {
            const Rat val = dot(u, p);
            if (mfirst || val > m) { m = val; mfirst = false; }
        }
        if (m > T) T = m;
    }
    value = only_origin ? Rat(1) : Rat(1) / (Rat(1) + T);
    const auto full = alpha(mK, G);
    if (full.alpha != value)
        throw ContractError("alpha_fano disagrees with the vertex-minimum algorithm");
    return value;
}

Rat glb_ricci(const Fan& fan) {
    const ToricDivisor mK = anticanonical(fan);
    const auto P = polytope_of(mK);
    const auto [volume, barycenter] = volume_and_barycenter(P);
    const auto lct = lct_point(mK, barycenter);
    if (lct.infinite) throw ContractError("glb_ricci: unexpected infinite lct");
    return lct.value;
}

namespace {

Int floor_div(const Int& num, const Int& den) {
    Int q = num / den;
    if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
    return q;
}

Int rat_floor_scaled(const Rat& x, const Int& q) {
    // floor(x * q)
    return floor_div(numerator(x) * q, denominator(x));
}

void enumerate_grid(const RationalPolytope& S, const Int& q,
                    const std::function<void(const RatVector&)>& visit) {
    const int d = S.dimension();
    const auto& verts = S.vertices();
    if (verts.empty()) return;
    std::vector<Int> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        Rat mn = verts[0](i), mx = verts[0](i);
        for (const auto& v : verts) {
            if (v(i) < mn) mn = v(i);
            if (v(i) > mx) mx = v(i);
        }
        lo[static_cast<size_t>(i)] = rat_floor_scaled(mn, q);
        hi[static_cast<size_t>(i)] = -rat_floor_scaled(-mx, q);  // ceil
    }
    Int cells(1);
    for (int i = 0; i < d; ++i) cells *= hi[static_cast<size_t>(i)] - lo[static_cast<size_t>(i)] + 1;
    if (cells > 2000000) throw CapacityError("grid oracle: lattice too large");
    std::vector<Int> cur = lo;
    while (true) {
        RatVector s(d);
        for (int i = 0; i < d; ++i) s(i) = Rat(cur[static_cast<size_t>(i)]) / Rat(q);
        if (S.contains(s)) visit(s);
        int i = 0;
        for (; i < d; ++i) {
            if (cur[static_cast<size_t>(i)] < hi[static_cast<size_t>(i)]) {
                ++cur[static_cast<size_t>(i)];
                for (int j = 0; j < i; ++j) cur[static_cast<size_t>(j)] = lo[static_cast<size_t>(j)];
                break;
            }
        }
        if (i == d) break;
        if (d == 0) break;
    }
}

}  // namespace

GridOracleResult grid_oracle_min(const ToricDivisor& D, const SymmetryGroup& G,
                                 const Int& denominator_cap) {
    require_nef_big(D);
    const auto P = polytope_of(D);
    const RatMatrix B = fixed_character_subspace(G, P.dimension());
    GridOracleResult result;
    bool first = true;
    auto consider = [&](const RatVector& ambient) {
        const auto lct = lct_point(D, ambient);
        ++result.points_checked;
        if (lct.infinite) return;
        if (first || lct.value < result.min_lct) {
            result.min_lct = lct.value;
            result.argmin = ambient;
            first = false;
        }
    };
    if (B.cols() == 0) {
        const RatVector origin = RatVector::Zero(P.dimension());
        if (P.contains(origin)) consider(origin);
    } else {
        const auto S = intersect_with_subspace(P, B);
        for (Int q(1); q <= denominator_cap; ++q) {
            enumerate_grid(S, q, [&](const RatVector& s) { consider(RatVector(B * s)); });
        }
    }
    if (first) throw DomainError("grid oracle: no rational grid point found in P_L^G");
    return result;
}

}  // namespace toralpha
