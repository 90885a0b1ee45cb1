#include "toralpha/symmetry.hpp"

#include <algorithm>
#include <set>

#include "toralpha/errors.hpp"
#include "toralpha/linalg.hpp"

namespace toralpha {

namespace {

bool same_vec(const IntVector& a, const IntVector& b) {
    return a.size() == b.size() && a.cwiseEqual(b).all();
}

// Ray permutation induced by an integer matrix, or empty if some ray leaves
// the ray set.
std::vector<int> induced_permutation(const Fan& fan, const IntMatrix& A) {
    std::vector<int> perm;
    std::set<int> hit;
    for (const auto& u : fan.rays) {
        const IntVector img = A * u;
        int found = -1;
        for (size_t j = 0; j < fan.rays.size(); ++j) {
            if (same_vec(fan.rays[j], img)) { found = static_cast<int>(j); break; }
        }
        if (found < 0 || hit.count(found)) return {};
        hit.insert(found);
        perm.push_back(found);
    }
    return perm;
}

bool maps_cones_to_cones(const Fan& fan, const std::vector<int>& perm) {
    std::set<std::vector<int>> cones(fan.max_cones.begin(), fan.max_cones.end());
    for (const auto& cone : fan.max_cones) {
        std::vector<int> image;
        for (int r : cone) image.push_back(perm[static_cast<size_t>(r)]);
        std::sort(image.begin(), image.end());
        if (!cones.count(image)) return false;
    }
    return true;
}

// Full element check; returns false rather than throwing so the search can
// discard candidates.
bool check_element(const Fan& fan, const IntMatrix& A, LatticeAutomorphism& out) {
    if (abs(determinant(A)) != 1) return false;
    auto perm = induced_permutation(fan, A);
    if (perm.empty() && !fan.rays.empty()) return false;
    if (!maps_cones_to_cones(fan, perm)) return false;
    out = {A, std::move(perm)};
    return true;
}

void sort_elements(std::vector<LatticeAutomorphism>& elems) {
    std::sort(elems.begin(), elems.end(), [](const auto& a, const auto& b) {
        return a.ray_permutation < b.ray_permutation;
    });
}

bool contains_perm(const std::vector<LatticeAutomorphism>& elems, const std::vector<int>& perm) {
    return std::any_of(elems.begin(), elems.end(),
                       [&](const auto& e) { return e.ray_permutation == perm; });
}

void verify_closure(const Fan& fan, const std::vector<LatticeAutomorphism>& elems) {
    for (const auto& a : elems) {
        for (const auto& b : elems) {
            const IntMatrix prod = a.matrix * b.matrix;
            const auto perm = induced_permutation(fan, prod);
            if (!contains_perm(elems, perm))
                throw ContractError("symmetry: group closure check failed");
        }
    }
}

}  // namespace

SymmetryGroup automorphism_group(const Fan& fan) {
    const int n = fan.dimension;
    if (fan.max_cones.empty()) throw ContractError("automorphism_group: fan has no maximal cones");
    const RatMatrix inv0 = [&] {
        const RatMatrix U0 = to_rat(cone_ray_matrix(fan, 0));
        RatMatrix inv(n, n);
        for (int j = 0; j < n; ++j) {
            RatVector e = RatVector::Zero(n);
            e(j) = Rat(1);
            auto col = solve_linear(U0, e);
            if (!col) throw ContractError("automorphism_group: degenerate reference cone");
            inv.col(j) = *col;
        }
        return inv;
    }();

    std::vector<LatticeAutomorphism> elems;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        std::vector<int> order = fan.max_cones[c];
        std::sort(order.begin(), order.end());
        do {
            IntMatrix U(n, n);
            for (int j = 0; j < n; ++j) U.col(j) = fan.rays[static_cast<size_t>(order[static_cast<size_t>(j)])];
            const RatMatrix cand = to_rat(U) * inv0;
            IntMatrix A(n, n);
            bool integral = true;
            for (int i = 0; i < n && integral; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (denominator(cand(i, j)) != 1) { integral = false; break; }
                    A(i, j) = numerator(cand(i, j));
                }
            }
            if (!integral) continue;
            LatticeAutomorphism elem;
            if (check_element(fan, A, elem) && !contains_perm(elems, elem.ray_permutation)) {
                elems.push_back(std::move(elem));
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    sort_elements(elems);
    verify_closure(fan, elems);
    return SymmetryGroup{std::move(elems)};
}

SymmetryGroup validate_subgroup(const Fan& fan, const std::vector<IntMatrix>& matrices) {
    const int n = fan.dimension;
    const size_t weyl_order = automorphism_group(fan).order();
    std::vector<LatticeAutomorphism> elems;
    LatticeAutomorphism id;
    check_element(fan, IntMatrix::Identity(n, n), id);
    elems.push_back(std::move(id));
    for (size_t i = 0; i < matrices.size(); ++i) {
        LatticeAutomorphism elem;
        if (matrices[i].rows() != n || matrices[i].cols() != n)
            throw InvarianceError("group element " + std::to_string(i) + " has wrong dimensions");
        if (!check_element(fan, matrices[i], elem))
            throw InvarianceError("group element " + std::to_string(i) +
                                  " does not preserve the fan");
        if (!contains_perm(elems, elem.ray_permutation)) elems.push_back(std::move(elem));
    }
    // Close under composition; bounded by the Weyl group order.
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < elems.size() && !grew; ++i) {
            for (size_t j = 0; j < elems.size(); ++j) {
                const IntMatrix prod = elems[i].matrix * elems[j].matrix;
                LatticeAutomorphism elem;
                if (!check_element(fan, prod, elem))
                    throw InvarianceError("group closure left the fan automorphisms");
                if (!contains_perm(elems, elem.ray_permutation)) {
                    elems.push_back(std::move(elem));
                    if (elems.size() > weyl_order)
                        throw InvarianceError("group closure exceeds the Weyl group order");
                    grew = true;
                    break;
                }
            }
        }
    }
    sort_elements(elems);
    verify_closure(fan, elems);
    return SymmetryGroup{std::move(elems)};
}

bool is_divisor_invariant(const ToricDivisor& D, const SymmetryGroup& G) {
    for (const auto& g : G.elements) {
        for (size_t r = 0; r < D.coefficients.size(); ++r) {
            if (D.coefficients[static_cast<size_t>(g.ray_permutation[r])] != D.coefficients[r])
                return false;
        }
    }
    return true;
}

RatMatrix fixed_character_subspace(const SymmetryGroup& G, int dimension) {
    RatMatrix stacked(static_cast<Eigen::Index>(G.order()) * dimension, dimension);
    Eigen::Index row = 0;
    for (const auto& g : G.elements) {
        const RatMatrix gt = to_rat(IntMatrix(g.matrix.transpose()));
        stacked.middleRows(row, dimension) = gt - RatMatrix::Identity(dimension, dimension);
        row += dimension;
    }
    const auto kernel = rational_kernel(stacked);
    RatMatrix B(dimension, static_cast<Eigen::Index>(kernel.size()));
    for (size_t j = 0; j < kernel.size(); ++j) B.col(static_cast<Eigen::Index>(j)) = kernel[j];
    return B;
}

VPolytope fixed_polytope(const RationalPolytope& P, const SymmetryGroup& G) {
    const RatMatrix B = fixed_character_subspace(G, P.dimension());
    if (B.cols() == 0) {
        const RatVector origin = RatVector::Zero(P.dimension());
        if (P.contains(origin)) return VPolytope{{origin}};
        return VPolytope{{}};
    }
    const auto sub = intersect_with_subspace(P, B);
    std::vector<RatVector> back;
    for (const auto& s : sub.vertices()) back.push_back(B * s);
    return VPolytope{sorted_unique(std::move(back))};
}

}  // namespace toralpha
