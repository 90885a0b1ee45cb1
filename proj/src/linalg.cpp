#include "toralpha/linalg.hpp"

#include <algorithm>

namespace toralpha {

namespace {

// Row-reduce M in place; returns the pivot column of each pivot row.
std::vector<int> reduced_row_echelon(RatMatrix& M) {
    const Eigen::Index rows = M.rows(), cols = M.cols();
    std::vector<int> pivot_cols;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (M(i, c) != 0) { piv = i; break; }
        }
        if (piv < 0) continue;
        if (piv != r) M.row(piv).swap(M.row(r));
        const Rat inv = Rat(1) / M(r, c);
        for (Eigen::Index j = c; j < cols; ++j) M(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || M(i, c) == 0) continue;
            const Rat f = M(i, c);
            for (Eigen::Index j = c; j < cols; ++j) M(i, j) -= f * M(r, j);
        }
        pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    return pivot_cols;
}

}  // namespace

std::optional<RatVector> solve_linear(const RatMatrix& A, const RatVector& b) {
    if (A.rows() != A.cols()) throw ContractError("solve_linear: matrix not square");
    if (A.rows() != b.size()) throw ContractError("solve_linear: rhs size mismatch");
    const Eigen::Index n = A.rows();
    RatMatrix aug(n, n + 1);
    aug.leftCols(n) = A;
    aug.col(n) = b;
    const auto pivots = reduced_row_echelon(aug);
    if (static_cast<Eigen::Index>(pivots.size()) != n ||
        (n > 0 && pivots.back() == static_cast<int>(n)))
        return std::nullopt;  // singular
    RatVector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = aug(i, n);
    return x;
}

Int determinant(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw ContractError("determinant: matrix not square");
    const Eigen::Index n = A.rows();
    if (n == 0) return Int(1);
    IntMatrix M = A;
    Int prev(1);
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            Eigen::Index piv = -1;
            for (Eigen::Index i = k + 1; i < n; ++i) {
                if (M(i, k) != 0) { piv = i; break; }
            }
            if (piv < 0) return Int(0);
            M.row(piv).swap(M.row(k));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                // Bareiss update: division is exact.
                M(i, j) = (M(k, k) * M(i, j) - M(i, k) * M(k, j)) / prev;
            }
            M(i, k) = 0;
        }
        prev = M(k, k);
    }
    return sign > 0 ? M(n - 1, n - 1) : Int(-M(n - 1, n - 1));
}

Int minor_gcd(const IntMatrix& A) {
    const Eigen::Index k = A.rows(), n = A.cols();
    if (k > n) throw ContractError("minor_gcd: more rows than columns");
    if (rational_rank(to_rat(A)) != static_cast<int>(k))
        throw ContractError("minor_gcd: rows are rank deficient");
    Int g(0);
    std::vector<Eigen::Index> cols(k);
    for (Eigen::Index i = 0; i < k; ++i) cols[i] = i;
    // Iterate over all k-subsets of columns in lexicographic order.
    while (true) {
        IntMatrix sub(k, k);
        for (Eigen::Index i = 0; i < k; ++i)
            for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = A(i, cols[j]);
        g = boost::multiprecision::gcd(g, Int(abs(determinant(sub))));
        if (g == 1) return g;
        Eigen::Index i = k;
        while (i-- > 0) {
            if (cols[i] != n - k + i) break;
        }
        if (i == static_cast<Eigen::Index>(-1)) break;
        ++cols[i];
        for (Eigen::Index j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return g;
}

std::vector<RatVector> rational_kernel(const RatMatrix& A) {
    const Eigen::Index n = A.cols();
    RatMatrix M = A;
    const auto pivots = reduced_row_echelon(M);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (Eigen::Index free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        RatVector v = RatVector::Zero(n);
        v(free) = Rat(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            v(pivots[r]) = -M(static_cast<Eigen::Index>(r), free);
        }
        basis.push_back(v);
    }
    return basis;
}

int rational_rank(const RatMatrix& A) {
    RatMatrix M = A;
    return static_cast<int>(reduced_row_echelon(M).size());
}

int affine_dimension(const std::vector<RatVector>& points) {
    if (points.empty()) return -1;
    if (points.size() == 1) return 0;
    const Eigen::Index n = points[0].size();
    RatMatrix diffs(static_cast<Eigen::Index>(points.size()) - 1, n);
    for (size_t i = 1; i < points.size(); ++i) {
        diffs.row(static_cast<Eigen::Index>(i) - 1) = (points[i] - points[0]).transpose();
    }
    return rational_rank(diffs);
}

}  // namespace toralpha
