#include "toralpha/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toralpha/errors.hpp"
#include "toralpha/linalg.hpp"

namespace toralpha {

namespace {

constexpr int kMaxDimension = 6;
constexpr int kMaxRays = 32;

Int content(const IntVector& v) {
    Int g(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, Int(abs(v(i))));
    return g;
}

RatMatrix rational_inverse(const IntMatrix& U) {
    const Eigen::Index n = U.rows();
    RatMatrix inv(n, n);
    const RatMatrix A = to_rat(U);
    for (Eigen::Index j = 0; j < n; ++j) {
        RatVector e = RatVector::Zero(n);
        e(j) = Rat(1);
        auto col = solve_linear(A, e);
        if (!col) throw ContractError("rational_inverse: singular matrix");
        inv.col(j) = *col;
    }
    return inv;
}

// Extreme rays of the pointed cone {x : C x >= 0}: every extreme ray is the
// kernel of n-1 of the rows.
std::vector<RatVector> extreme_rays(const RatMatrix& C) {
    const Eigen::Index m = C.rows(), n = C.cols();
    std::vector<RatVector> rays;
    if (n < 2) {
        // In dimension 1 the candidates are just +-e1.
        for (int s : {1, -1}) {
            RatVector d(1);
            d(0) = Rat(s);
            bool ok = true;
            for (Eigen::Index i = 0; i < m; ++i)
                if (dot(RatVector(C.row(i).transpose()), d) < 0) ok = false;
            if (ok) rays.push_back(d);
        }
        return rays;
    }
    std::vector<Eigen::Index> idx(static_cast<size_t>(n) - 1);
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<Eigen::Index>(i);
    if (m < n - 1) return rays;
    while (true) {
        RatMatrix sub(n - 1, n);
        for (Eigen::Index i = 0; i + 1 < n; ++i) sub.row(i) = C.row(idx[static_cast<size_t>(i)]);
        auto kernel = rational_kernel(sub);
        if (kernel.size() == 1) {
            for (int s : {1, -1}) {
                RatVector d = Rat(s) * kernel[0];
                bool ok = true;
                for (Eigen::Index i = 0; i < m; ++i) {
                    if (dot(RatVector(C.row(i).transpose()), d) < 0) { ok = false; break; }
                }
                if (ok) rays.push_back(d);
            }
        }
        Eigen::Index i = static_cast<Eigen::Index>(idx.size());
        while (i-- > 0) {
            if (idx[static_cast<size_t>(i)] != m - (n - 1) + i) break;
        }
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (size_t j = static_cast<size_t>(i) + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
    return rays;
}

// Does d lie in the cone spanned by the (independent) columns of U?
bool in_simplicial_cone_span(const IntMatrix& U, const RatVector& d) {
    if (U.cols() == 0) {
        for (Eigen::Index i = 0; i < d.size(); ++i)
            if (d(i) != 0) return false;
        return true;
    }
    const RatMatrix Ur = to_rat(U);
    const RatMatrix G = Ur.transpose() * Ur;
    auto lambda = solve_linear(G, (Ur.transpose() * d).eval());
    if (!lambda) return false;
    if (!exact_eq(RatVector(Ur * *lambda), d)) return false;
    for (Eigen::Index i = 0; i < lambda->size(); ++i)
        if ((*lambda)(i) < 0) return false;
    return true;
}

}  // namespace

IntMatrix cone_ray_matrix(const Fan& fan, int cone_index) {
    const auto& cone = fan.max_cones[static_cast<size_t>(cone_index)];
    IntMatrix U(fan.dimension, static_cast<Eigen::Index>(cone.size()));
    for (size_t j = 0; j < cone.size(); ++j)
        U.col(static_cast<Eigen::Index>(j)) = fan.rays[static_cast<size_t>(cone[j])];
    return U;
}

std::vector<Diagnostic> validate_fan(const Fan& fan) {
    std::vector<Diagnostic> diags;
    const int n = fan.dimension;
    if (n < 1 || n > kMaxDimension) {
        diags.push_back({"dimension out of accepted range [1,6]", {n}});
        return diags;
    }
    if (fan.rays.size() > kMaxRays) {
        diags.push_back({"ray count exceeds cap", {static_cast<int>(fan.rays.size())}});
        return diags;
    }
    for (size_t i = 0; i < fan.rays.size(); ++i) {
        const auto& u = fan.rays[i];
        if (u.size() != n) {
            diags.push_back({"ray has wrong dimension", {static_cast<int>(i)}});
            return diags;
        }
        const Int c = content(u);
        if (c == 0) diags.push_back({"ray " + std::to_string(i) + " is zero", {static_cast<int>(i)}});
        else if (c != 1)
            diags.push_back({"ray " + std::to_string(i) + " not primitive", {static_cast<int>(i)}});
        for (size_t j = i + 1; j < fan.rays.size(); ++j) {
            if (fan.rays[j].size() == u.size() && fan.rays[j].cwiseEqual(u).all())
                diags.push_back({"duplicate rays", {static_cast<int>(i), static_cast<int>(j)}});
        }
    }
    if (!diags.empty()) return diags;

    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        std::set<int> uniq(cone.begin(), cone.end());
        if (cone.size() != static_cast<size_t>(n) || uniq.size() != cone.size()) {
            diags.push_back({"maximal cone " + std::to_string(c) + " does not have n distinct rays",
                             {static_cast<int>(c)}});
            continue;
        }
        for (int r : cone) {
            if (r < 0 || static_cast<size_t>(r) >= fan.rays.size()) {
                diags.push_back({"cone " + std::to_string(c) + " references missing ray", {static_cast<int>(c), r}});
                return diags;
            }
        }
        if (determinant(cone_ray_matrix(fan, static_cast<int>(c))) == 0) {
            diags.push_back({"cone " + std::to_string(c) + " rays are linearly dependent",
                             {static_cast<int>(c)}});
        }
    }
    if (!diags.empty()) return diags;

    // Pairwise intersections must be the cone on the shared rays: every
    // extreme ray of the H-description intersection has to lie in it.
    for (size_t a = 0; a < fan.max_cones.size(); ++a) {
        const RatMatrix invA = rational_inverse(cone_ray_matrix(fan, static_cast<int>(a)));
        for (size_t b = a + 1; b < fan.max_cones.size(); ++b) {
            const RatMatrix invB = rational_inverse(cone_ray_matrix(fan, static_cast<int>(b)));
            RatMatrix C(2 * n, n);
            C.topRows(n) = invA;
            C.bottomRows(n) = invB;
            std::vector<int> shared;
            std::set_intersection(fan.max_cones[a].begin(), fan.max_cones[a].end(),
                                  fan.max_cones[b].begin(), fan.max_cones[b].end(),
                                  std::back_inserter(shared));
            IntMatrix Ushared(n, static_cast<Eigen::Index>(shared.size()));
            for (size_t j = 0; j < shared.size(); ++j)
                Ushared.col(static_cast<Eigen::Index>(j)) = fan.rays[static_cast<size_t>(shared[j])];
            for (const auto& d : extreme_rays(C)) {
                if (!in_simplicial_cone_span(Ushared, d)) {
                    diags.push_back({"cones " + std::to_string(a) + " and " + std::to_string(b) +
                                         " overlap beyond their common face",
                                     {static_cast<int>(a), static_cast<int>(b)}});
                    break;
                }
            }
        }
    }
    return diags;
}

SmoothnessResult is_smooth(const Fan& fan) {
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const Int d = determinant(cone_ray_matrix(fan, static_cast<int>(c)));
        if (abs(d) != 1) return {false, static_cast<int>(c), d};
    }
    return {true, -1, Int(1)};
}

bool is_complete(const Fan& fan) {
    const int n = fan.dimension;
    if (fan.max_cones.empty()) return false;
    if (n == 1) {
        bool pos = false, neg = false;
        for (const auto& cone : fan.max_cones) {
            for (int r : cone) {
                if (fan.rays[static_cast<size_t>(r)](0) > 0) pos = true;
                if (fan.rays[static_cast<size_t>(r)](0) < 0) neg = true;
            }
        }
        return pos && neg;
    }
    // Wall -> incident maximal cones.
    std::map<std::vector<int>, std::vector<int>> walls;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        for (size_t drop = 0; drop < cone.size(); ++drop) {
            std::vector<int> wall;
            for (size_t j = 0; j < cone.size(); ++j)
                if (j != drop) wall.push_back(cone[j]);
            walls[wall].push_back(static_cast<int>(c));
        }
    }
    for (const auto& [wall, cones] : walls) {
        if (cones.size() != 2) return false;
    }
    // Connectivity of the wall-adjacency graph.
    std::vector<std::set<int>> adj(fan.max_cones.size());
    for (const auto& [wall, cones] : walls) {
        adj[static_cast<size_t>(cones[0])].insert(cones[1]);
        adj[static_cast<size_t>(cones[1])].insert(cones[0]);
    }
    std::vector<bool> seen(fan.max_cones.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    size_t count = 0;
    while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        ++count;
        for (int d : adj[static_cast<size_t>(c)]) {
            if (!seen[static_cast<size_t>(d)]) {
                seen[static_cast<size_t>(d)] = true;
                stack.push_back(d);
            }
        }
    }
    return count == fan.max_cones.size();
}

ConeLocation cone_containing(const Fan& fan, const RatVector& x) {
    if (x.size() != fan.dimension) throw ContractError("cone_containing: dimension mismatch");
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const RatMatrix U = to_rat(cone_ray_matrix(fan, static_cast<int>(c)));
        auto lambda = solve_linear(U, x);
        if (!lambda) continue;
        bool nonneg = true;
        for (Eigen::Index i = 0; i < lambda->size(); ++i)
            if ((*lambda)(i) < 0) { nonneg = false; break; }
        if (nonneg) return {static_cast<int>(c), *lambda};
    }
    throw DomainError("cone_containing: point not covered (fan not complete?)");
}

}  // namespace toralpha
