#pragma once

#include <random>
#include <vector>

#include "toralpha/divisor.hpp"
#include "toralpha/fan.hpp"

namespace fixtures {

using namespace toralpha;

inline IntVector iv(std::initializer_list<long long> entries) {
    IntVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (long long e : entries) v(i++) = Int(e);
    return v;
}

inline RatVector rv(std::initializer_list<const char*> entries) {
    RatVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (const char* e : entries) v(i++) = parse_rational(e);
    return v;
}

inline Fan p1_fan() {
    return Fan{1, {iv({1}), iv({-1})}, {{0}, {1}}};
}

inline Fan p2_fan() {
    return Fan{2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}}};
}

inline Fan p3_fan() {
    return Fan{3,
               {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({-1, -1, -1})},
               {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

inline Fan p1xp1_fan() {
    return Fan{2, {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
}

// Blow-up of P^2 at a point: rays (1,0),(1,1),(0,1),(-1,-1).
inline Fan blowup_fan() {
    return Fan{2, {iv({1, 0}), iv({1, 1}), iv({0, 1}), iv({-1, -1})}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
}

// Divisor with polytope P(k,l) on the blow-up fan.
inline ToricDivisor pkl_divisor(const Fan& blowup, long long k, long long l) {
    return ToricDivisor{&blowup, {Int(0), Int(-k), Int(0), Int(l)}};
}

inline IntMatrix swap_matrix() {
    IntMatrix m(2, 2);
    m << Int(0), Int(1), Int(1), Int(0);
    return m;
}

// Deterministic small rationals for fuzz-style tests.
class RatGen {
public:
    explicit RatGen(unsigned seed) : rng_(seed) {}

    Rat small(int num_bound = 8, int den_bound = 6) {
        std::uniform_int_distribution<int> num(-num_bound, num_bound);
        std::uniform_int_distribution<int> den(1, den_bound);
        return Rat(Int(num(rng_))) / Rat(Int(den(rng_)));
    }

    Int integer(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return Int(d(rng_));
    }

    RatVector vector(int n, int num_bound = 8, int den_bound = 6) {
        RatVector v(n);
        for (int i = 0; i < n; ++i) v(i) = small(num_bound, den_bound);
        return v;
    }

private:
    std::mt19937 rng_;
};

}  // namespace fixtures
