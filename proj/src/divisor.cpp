#include "toralpha/divisor.hpp"

#include "toralpha/errors.hpp"
#include "toralpha/linalg.hpp"

namespace toralpha {

namespace {

void check_divisor(const ToricDivisor& D) {
    if (!D.fan) throw ContractError("divisor: missing fan");
    if (D.coefficients.size() != D.fan->rays.size())
        throw ContractError("divisor: coefficient count does not match ray count");
}

}  // namespace

ToricDivisor anticanonical(const Fan& fan) {
    return ToricDivisor{&fan, std::vector<Int>(fan.rays.size(), Int(1))};
}

std::vector<RatVector> support_function(const ToricDivisor& D) {
    check_divisor(D);
    const Fan& fan = *D.fan;
    std::vector<RatVector> slopes;
    slopes.reserve(fan.max_cones.size());
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        const int n = fan.dimension;
        RatMatrix A(n, n);  // rows = rays of the cone
        RatVector b(n);
        for (int i = 0; i < n; ++i) {
            A.row(i) = to_rat(fan.rays[static_cast<size_t>(cone[static_cast<size_t>(i)])]).transpose();
            b(i) = Rat(-D.coefficients[static_cast<size_t>(cone[static_cast<size_t>(i)])]);
        }
        auto v = solve_linear(A, b);
        if (!v) throw ContractError("support_function: singular cone ray matrix");
        slopes.push_back(*v);
    }
    return slopes;
}

Rat support_value(const ToricDivisor& D, const std::vector<RatVector>& slopes,
                  const RatVector& x) {
    const auto loc = cone_containing(*D.fan, x);
    return dot(slopes[static_cast<size_t>(loc.cone_index)], x);
}

RationalPolytope polytope_of(const ToricDivisor& D) {
    check_divisor(D);
    std::vector<Halfspace> hrep;
    for (size_t r = 0; r < D.fan->rays.size(); ++r) {
        hrep.push_back({D.fan->rays[r], Rat(-D.coefficients[r])});
    }
    return RationalPolytope(D.fan->dimension, std::move(hrep));
}

NefResult is_nef(const ToricDivisor& D) {
    const auto slopes = support_function(D);
    for (size_t c = 0; c < slopes.size(); ++c) {
        for (size_t r = 0; r < D.fan->rays.size(); ++r) {
            if (dot(D.fan->rays[r], slopes[c]) < Rat(-D.coefficients[r])) {
                return {false, static_cast<int>(c), static_cast<int>(r)};
            }
        }
    }
    return {true, -1, -1};
}

bool is_big(const ToricDivisor& D) {
    const auto P = polytope_of(D);
    return affine_dimension(P.vertices()) == D.fan->dimension;
}

bool is_ample(const ToricDivisor& D) {
    if (!is_nef(D).nef) return false;
    const auto slopes = support_function(D);
    for (size_t i = 0; i < slopes.size(); ++i)
        for (size_t j = i + 1; j < slopes.size(); ++j)
            if (exact_eq(slopes[i], slopes[j])) return false;
    return true;
}

VPolytope batyrev_tschinkel_newton_body(const ToricDivisor& D) {
    if (!is_nef(D).nef) throw DomainError("batyrev_tschinkel_newton_body: divisor is not nef");
    return VPolytope{sorted_unique(support_function(D))};
}

}  // namespace toralpha
