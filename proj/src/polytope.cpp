#include "toralpha/polytope.hpp"

#include <algorithm>

#include "toralpha/errors.hpp"
#include "toralpha/linalg.hpp"
#include "toralpha/lp.hpp"

namespace toralpha {

namespace {

constexpr int kMaxDimension = 6;
constexpr int kMaxInequalities = 32;

// Is the recession cone {d : <normal, d> >= 0 for all inequalities} nonzero?
// A nonzero d can be scaled so some coordinate is +-1, so 2n feasibility LPs
// decide it.
bool recession_cone_nonzero(const std::vector<Halfspace>& hrep, int n) {
    for (int i = 0; i < n; ++i) {
        for (int sign : {1, -1}) {
            LinearProgram lp;
            lp.objective = RatVector::Zero(n);
            lp.nonnegative.assign(static_cast<size_t>(n), false);
            for (const auto& h : hrep) {
                lp.constraints.push_back({to_rat(h.normal), Relation::GreaterEqual, Rat(0)});
            }
            RatVector e = RatVector::Zero(n);
            e(i) = Rat(1);
            lp.constraints.push_back({e, Relation::Equal, Rat(sign)});
            if (feasible(lp)) return true;
        }
    }
    return false;
}

bool hrep_feasible(const std::vector<Halfspace>& hrep, int n) {
    LinearProgram lp;
    lp.objective = RatVector::Zero(n);
    lp.nonnegative.assign(static_cast<size_t>(n), false);
    for (const auto& h : hrep) {
        lp.constraints.push_back({to_rat(h.normal), Relation::GreaterEqual, h.offset});
    }
    return feasible(lp);
}

// Scale a rational row vector to an integer normal with positive content.
IntVector clear_denominators(const RatVector& v, Rat& scale_out) {
    Int l(1);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        l = boost::multiprecision::lcm(l, denominator(v(i)));
    }
    IntVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out(i) = numerator(v(i)) * (l / denominator(v(i)));
    }
    scale_out = Rat(l);
    return out;
}

struct Simplex {
    std::vector<RatVector> points;  // d+1 points in the chart coordinates
};

int intrinsic_dim(const std::vector<RatVector>& verts) { return affine_dimension(verts); }

// Pulling triangulation of conv(verts), full-dimensional in its chart of
// dimension d, described by hrep.  Facet vertex sets come from tightness in
// the H-rep; each facet is parametrized affinely and triangulated
// recursively, then coned over the lexicographically smallest vertex (or a
// caller-chosen one at the top level).
std::vector<Simplex> triangulate(const std::vector<Halfspace>& hrep,
                                 const std::vector<RatVector>& verts, int d,
                                 size_t apex_index) {
    if (d <= 0) return {};
    if (verts.size() == static_cast<size_t>(d) + 1) {
        return {Simplex{verts}};
    }
    const RatVector& apex = verts[apex_index];
    std::vector<Simplex> out;
    std::vector<std::vector<RatVector>> seen_facets;
    for (const auto& h : hrep) {
        if (dot(h.normal, apex) == h.offset) continue;  // apex on this facet
        std::vector<RatVector> fverts;
        for (const auto& v : verts) {
            if (dot(h.normal, v) == h.offset) fverts.push_back(v);
        }
        if (intrinsic_dim(fverts) != d - 1) continue;
        fverts = sorted_unique(std::move(fverts));
        if (std::find_if(seen_facets.begin(), seen_facets.end(), [&](const auto& f) {
                if (f.size() != fverts.size()) return false;
                for (size_t i = 0; i < f.size(); ++i)
                    if (!exact_eq(f[i], fverts[i])) return false;
                return true;
            }) != seen_facets.end())
            continue;  // same facet reachable through a duplicate inequality
        seen_facets.push_back(fverts);

        // Chart for the facet hyperplane {<u,m> = c}: m = m0 + B s.
        RatMatrix urow(1, d);
        for (int j = 0; j < d; ++j) urow(0, j) = Rat(h.normal(j));
        const auto kernel = rational_kernel(urow);
        RatMatrix B(d, static_cast<Eigen::Index>(kernel.size()));
        for (size_t j = 0; j < kernel.size(); ++j) B.col(static_cast<Eigen::Index>(j)) = kernel[j];
        const RatVector m0 = fverts.front();

        // Substituted H-rep and facet vertices in s-coordinates.
        std::vector<Halfspace> sub_hrep;
        for (const auto& g : hrep) {
            RatVector coeffs = (to_rat(g.normal).transpose() * B).transpose();
            Rat scale;
            IntVector normal = clear_denominators(coeffs, scale);
            sub_hrep.push_back({normal, scale * (g.offset - dot(g.normal, m0))});
        }
        const RatMatrix BtB = B.transpose() * B;
        std::vector<RatVector> sverts;
        for (const auto& v : fverts) {
            auto s = solve_linear(BtB, (B.transpose() * (v - m0)).eval());
            if (!s) throw ContractError("triangulate: chart basis degenerate");
            sverts.push_back(*s);
        }
        auto ssorted = sorted_unique(sverts);
        for (auto& simplex : triangulate(sub_hrep, ssorted, d - 1, 0)) {
            Simplex lifted;
            for (const auto& s : simplex.points) lifted.points.push_back(m0 + B * s);
            lifted.points.push_back(apex);
            out.push_back(std::move(lifted));
        }
    }
    return out;
}

}  // namespace

std::vector<RatVector> RationalPolytope::vertices() const {
    if (vertex_cache_) return *vertex_cache_;
    const int n = dimension_;
    if (n > kMaxDimension) throw CapacityError("polytope: dimension exceeds cap");
    if (hrep_.size() > kMaxInequalities)
        throw CapacityError("polytope: inequality count exceeds cap");

    if (n == 0) {
        // Zero-dimensional ambient space: the single point () or nothing.
        std::vector<RatVector> vs;
        bool ok = true;
        for (const auto& h : hrep_)
            if (Rat(0) < h.offset) ok = false;
        if (ok) vs.push_back(RatVector(0));
        vertex_cache_ = std::move(vs);
        return *vertex_cache_;
    }

    if (!hrep_feasible(hrep_, n)) {
        vertex_cache_ = std::vector<RatVector>{};
        return *vertex_cache_;
    }
    if (recession_cone_nonzero(hrep_, n)) {
        throw DomainError("polytope: feasible set is unbounded");
    }

    std::vector<RatVector> found;
    const size_t m = hrep_.size();
    std::vector<size_t> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = static_cast<size_t>(i);
    if (m >= static_cast<size_t>(n)) {
        while (true) {
            RatMatrix A(n, n);
            RatVector b(n);
            for (int i = 0; i < n; ++i) {
                const auto& h = hrep_[idx[static_cast<size_t>(i)]];
                for (int j = 0; j < n; ++j) A(i, j) = Rat(h.normal(j));
                b(i) = h.offset;
            }
            if (auto x = solve_linear(A, b)) {
                if (contains(*x, false)) found.push_back(*x);
            }
            int i = n;
            while (i-- > 0) {
                if (idx[static_cast<size_t>(i)] != m - static_cast<size_t>(n) + static_cast<size_t>(i)) break;
            }
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < n; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    vertex_cache_ = sorted_unique(std::move(found));
    return *vertex_cache_;
}

bool RationalPolytope::contains(const RatVector& m, bool strict) const {
    if (m.size() != dimension_) throw ContractError("contains: dimension mismatch");
    for (const auto& h : hrep_) {
        const Rat lhs = dot(h.normal, m);
        if (strict ? !(lhs > h.offset) : !(lhs >= h.offset)) return false;
    }
    return true;
}

RationalPolytope intersect_with_subspace(const RationalPolytope& P, const RatMatrix& B) {
    const int sub_dim = static_cast<int>(B.cols());
    if (sub_dim > 0 && rational_rank(B) != sub_dim)
        throw ContractError("intersect_with_subspace: basis is rank deficient");
    if (B.cols() > 0 && B.rows() != P.dimension())
        throw ContractError("intersect_with_subspace: basis row count mismatch");
    std::vector<Halfspace> sub;
    for (const auto& h : P.hrep()) {
        RatVector coeffs(sub_dim);
        for (int j = 0; j < sub_dim; ++j) coeffs(j) = dot(h.normal, RatVector(B.col(j)));
        Rat scale;
        IntVector normal = clear_denominators(coeffs, scale);
        sub.push_back({normal, scale * h.offset});
    }
    return RationalPolytope(sub_dim, std::move(sub));
}

std::pair<Rat, RatVector> volume_and_barycenter(const RationalPolytope& P, size_t apex) {
    const auto& verts = P.vertices();
    const int n = P.dimension();
    const int d = affine_dimension(verts);
    if (d != n) {
        throw DomainError("volume_and_barycenter: polytope has intrinsic dimension " +
                          std::to_string(d) + " < ambient " + std::to_string(n));
    }
    if (apex >= verts.size()) throw ContractError("volume_and_barycenter: apex out of range");
    Rat volume(0);
    RatVector moment = RatVector::Zero(n);
    Int nfact(1);
    for (int i = 2; i <= n; ++i) nfact *= i;
    for (const auto& simplex : triangulate(P.hrep(), verts, n, apex)) {
        RatMatrix E(n, n);
        for (int j = 0; j < n; ++j) E.col(j) = simplex.points[static_cast<size_t>(j)] - simplex.points.back();
        // Rational determinant via elimination on a small matrix.
        RatMatrix M = E;
        Rat det(1);
        bool singular = false;
        for (int k = 0; k < n; ++k) {
            int piv = -1;
            for (int i = k; i < n; ++i)
                if (M(i, k) != 0) { piv = i; break; }
            if (piv < 0) { singular = true; break; }
            if (piv != k) { M.row(piv).swap(M.row(k)); det = -det; }
            det *= M(k, k);
            for (int i = k + 1; i < n; ++i) {
                const Rat f = M(i, k) / M(k, k);
                for (int j = k; j < n; ++j) M(i, j) -= f * M(k, j);
            }
        }
        if (singular) continue;
        const Rat vol = abs(det) / Rat(nfact);
        volume += vol;
        RatVector centroid = RatVector::Zero(n);
        for (const auto& p : simplex.points) centroid += p;
        centroid /= Rat(n + 1);
        moment += vol * centroid;
    }
    if (volume == 0) throw DomainError("volume_and_barycenter: degenerate triangulation");
    return {volume, RatVector(moment / volume)};
}

bool in_convex_hull(const std::vector<RatVector>& points, const RatVector& m) {
    if (points.empty()) return false;
    const Eigen::Index n = m.size();
    const Eigen::Index k = static_cast<Eigen::Index>(points.size());
    LinearProgram lp;
    lp.objective = RatVector::Zero(k);
    lp.nonnegative.assign(static_cast<size_t>(k), true);
    for (Eigen::Index i = 0; i < n; ++i) {
        RatVector row(k);
        for (Eigen::Index j = 0; j < k; ++j) row(j) = points[static_cast<size_t>(j)](i);
        lp.constraints.push_back({row, Relation::Equal, m(i)});
    }
    lp.constraints.push_back({RatVector::Ones(k), Relation::Equal, Rat(1)});
    return feasible(lp);
}

}  // namespace toralpha
