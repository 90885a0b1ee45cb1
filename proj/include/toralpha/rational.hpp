#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <vector>

#include "toralpha/errors.hpp"

namespace toralpha {

// Exact scalars.  All arithmetic in the project is over these; floating
// point is never used.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

// Parse "p/q" or "p" into canonical form (gcd(|p|,q)=1, q>0).  Division by
// the denominator canonicalizes; mpq string construction alone would not.
Rat parse_rational(const std::string& s);

// Canonical serialization: "p/q" with q>1, otherwise "p".
std::string format_rational(const Rat& r);

Int parse_integer(const std::string& s);

inline Int numerator(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }
inline Int denominator(const Rat& r) { return Int(boost::multiprecision::denominator(r)); }

inline RatVector to_rat(const IntVector& v) {
    RatVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rat(v(i));
    return out;
}

inline RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

// Exact dot product of an integer normal with a rational point.
inline Rat dot(const IntVector& u, const RatVector& m) {
    if (u.size() != m.size()) throw ContractError("dot: dimension mismatch");
    Rat acc(0);
    for (Eigen::Index i = 0; i < u.size(); ++i) acc += Rat(u(i)) * m(i);
    return acc;
}

inline Rat dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw ContractError("dot: dimension mismatch");
    Rat acc(0);
    for (Eigen::Index i = 0; i < a.size(); ++i) acc += a(i) * b(i);
    return acc;
}

// Lexicographic order, used everywhere a deterministic vertex order is needed.
inline bool lex_less(const RatVector& a, const RatVector& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return a.size() < b.size();
}

inline bool exact_eq(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

// Sort lexicographically and drop exact duplicates.
std::vector<RatVector> sorted_unique(std::vector<RatVector> points);

}  // namespace toralpha
