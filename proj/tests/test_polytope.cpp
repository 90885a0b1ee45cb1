#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "toralpha/polytope.hpp"

using namespace toralpha;
using fixtures::iv;
using fixtures::rv;

namespace {

RationalPolytope make_polytope(int dim, std::initializer_list<std::pair<IntVector, Rat>> hs) {
    std::vector<Halfspace> hrep;
    for (const auto& [n, o] : hs) hrep.push_back({n, o});
    return RationalPolytope(dim, std::move(hrep));
}

// P(1,3): x>=0, y>=0, x+y>=1, -x-y>=-3.
RationalPolytope p13() {
    return make_polytope(2, {{iv({1, 0}), Rat(0)},
                             {iv({0, 1}), Rat(0)},
                             {iv({1, 1}), Rat(1)},
                             {iv({-1, -1}), Rat(-3)}});
}

// Q for P^2: x>=-1, y>=-1, -x-y>=-1.
RationalPolytope q_p2() {
    return make_polytope(2, {{iv({1, 0}), Rat(-1)},
                             {iv({0, 1}), Rat(-1)},
                             {iv({-1, -1}), Rat(-1)}});
}

// Q for the blow-up: vertices (-1,0),(0,-1),(2,-1),(-1,2).
RationalPolytope q_blowup() {
    return make_polytope(2, {{iv({1, 0}), Rat(-1)},
                             {iv({1, 1}), Rat(-1)},
                             {iv({0, 1}), Rat(-1)},
                             {iv({-1, -1}), Rat(-1)}});
}

}  // namespace

TEST_CASE("vertex enumeration: reference polytopes") {
    const auto& v13 = p13().vertices();
    REQUIRE(v13.size() == 4);
    CHECK(exact_eq(v13[0], rv({"0", "1"})));
    CHECK(exact_eq(v13[1], rv({"0", "3"})));
    CHECK(exact_eq(v13[2], rv({"1", "0"})));
    CHECK(exact_eq(v13[3], rv({"3", "0"})));

    const auto& vq = q_p2().vertices();
    REQUIRE(vq.size() == 3);
    CHECK(exact_eq(vq[0], rv({"-1", "-1"})));
    CHECK(exact_eq(vq[1], rv({"-1", "2"})));
    CHECK(exact_eq(vq[2], rv({"2", "-1"})));
}

TEST_CASE("unbounded and empty inputs") {
    auto quadrant = make_polytope(2, {{iv({1, 0}), Rat(0)}, {iv({0, 1}), Rat(0)}});
    CHECK_THROWS_AS(quadrant.vertices(), DomainError);

    auto empty = make_polytope(1, {{iv({1}), Rat(1)}, {iv({-1}), Rat(0)}});
    CHECK(empty.vertices().empty());
}

TEST_CASE("containment, strict and non-strict") {
    const auto Q = q_blowup();
    CHECK(Q.contains(rv({"0", "0"}), true));
    CHECK_FALSE(Q.contains(rv({"1/2", "1/2"}), true));  // tight on (-1,-1)
    CHECK(Q.contains(rv({"1/2", "1/2"}), false));
}

TEST_CASE("subspace intersection") {
    RatMatrix diag(2, 1);
    diag << Rat(1), Rat(1);
    const auto cut = intersect_with_subspace(p13(), diag);
    const auto& sv = cut.vertices();
    REQUIRE(sv.size() == 2);
    CHECK(sv[0](0) == Rat(1, 2));
    CHECK(sv[1](0) == Rat(3, 2));

    // Identity basis: same polytope.
    const auto same = intersect_with_subspace(p13(), RatMatrix::Identity(2, 2));
    REQUIRE(same.vertices().size() == 4);
    for (size_t i = 0; i < 4; ++i) CHECK(exact_eq(same.vertices()[i], p13().vertices()[i]));

    RatMatrix bad(2, 2);
    bad << Rat(1), Rat(2), Rat(1), Rat(2);
    CHECK_THROWS_AS(intersect_with_subspace(p13(), bad), ContractError);
}

TEST_CASE("subspace intersection commutes with containment") {
    fixtures::RatGen gen(17);
    RatMatrix diag(2, 1);
    diag << Rat(1), Rat(1);
    const auto P = p13();
    const auto cut = intersect_with_subspace(P, diag);
    for (int i = 0; i < 60; ++i) {
        RatVector s(1);
        s(0) = gen.small(4, 4);
        CHECK(cut.contains(s) == P.contains(RatVector(diag * s)));
    }
}

TEST_CASE("volume and barycenter") {
    auto square = make_polytope(2, {{iv({1, 0}), Rat(-1)},
                                    {iv({-1, 0}), Rat(-1)},
                                    {iv({0, 1}), Rat(-1)},
                                    {iv({0, -1}), Rat(-1)}});
    auto [vol, bary] = volume_and_barycenter(square);
    CHECK(vol == 4);
    CHECK(exact_eq(bary, rv({"0", "0"})));

    auto [volq, baryq] = volume_and_barycenter(q_p2());
    CHECK(exact_eq(baryq, rv({"0", "0"})));

    auto [volb, baryb] = volume_and_barycenter(q_blowup());
    CHECK(volb == 4);
    CHECK(exact_eq(baryb, rv({"1/12", "1/12"})));
}

TEST_CASE("barycenter is independent of the triangulation apex") {
    const auto Q = q_blowup();
    const auto base = volume_and_barycenter(Q, 0);
    for (size_t apex = 1; apex < Q.vertices().size(); ++apex) {
        const auto other = volume_and_barycenter(Q, apex);
        CHECK(other.first == base.first);
        CHECK(exact_eq(other.second, base.second));
    }
}

TEST_CASE("volume in dimension 3") {
    auto cube = make_polytope(3, {{iv({1, 0, 0}), Rat(0)},
                                  {iv({-1, 0, 0}), Rat(-2)},
                                  {iv({0, 1, 0}), Rat(0)},
                                  {iv({0, -1, 0}), Rat(-2)},
                                  {iv({0, 0, 1}), Rat(0)},
                                  {iv({0, 0, -1}), Rat(-2)}});
    auto [vol, bary] = volume_and_barycenter(cube);
    CHECK(vol == 8);
    CHECK(exact_eq(bary, rv({"1", "1", "1"})));

    auto simplex = make_polytope(3, {{iv({1, 0, 0}), Rat(0)},
                                     {iv({0, 1, 0}), Rat(0)},
                                     {iv({0, 0, 1}), Rat(0)},
                                     {iv({-1, -1, -1}), Rat(-1)}});
    auto [vs, bs] = volume_and_barycenter(simplex);
    CHECK(vs == Rat(1, 6));
    CHECK(exact_eq(bs, rv({"1/4", "1/4", "1/4"})));
}

TEST_CASE("volume scaling and translation") {
    fixtures::RatGen gen(19);
    for (int trial = 0; trial < 10; ++trial) {
        // Random bounded triangle-ish polytope: box plus a random cut.
        std::vector<Halfspace> hrep{{iv({1, 0}), Rat(-2)},
                                    {iv({-1, 0}), Rat(-2)},
                                    {iv({0, 1}), Rat(-2)},
                                    {iv({0, -1}), Rat(-2)}};
        IntVector cut(2);
        cut << gen.integer(-2, 2), gen.integer(-2, 2);
        if (cut(0) == 0 && cut(1) == 0) cut(0) = Int(1);
        hrep.push_back({cut, gen.small(2, 2)});
        RationalPolytope P(2, hrep);
        if (P.vertices().size() < 3) continue;
        const auto [vol, bary] = volume_and_barycenter(P);

        // Scale by 3: offsets scale, volume scales by 9, barycenter by 3.
        std::vector<Halfspace> scaled;
        for (const auto& h : hrep) scaled.push_back({h.normal, Rat(3) * h.offset});
        const auto [vol3, bary3] = volume_and_barycenter(RationalPolytope(2, scaled));
        CHECK(vol3 == Rat(9) * vol);
        CHECK(exact_eq(bary3, RatVector(Rat(3) * bary)));

        // Translate by t: volume fixed, barycenter shifts.
        const RatVector t = rv({"1", "-2"});
        std::vector<Halfspace> moved;
        for (const auto& h : hrep) moved.push_back({h.normal, h.offset + dot(h.normal, t)});
        const auto [volm, barym] = volume_and_barycenter(RationalPolytope(2, moved));
        CHECK(volm == vol);
        CHECK(exact_eq(barym, RatVector(bary + t)));
    }
}

TEST_CASE("lower-dimensional polytope reports its intrinsic dimension") {
    auto segment = make_polytope(2, {{iv({1, 0}), Rat(0)},
                                     {iv({-1, 0}), Rat(0)},
                                     {iv({0, 1}), Rat(0)},
                                     {iv({0, -1}), Rat(-1)}});
    CHECK_THROWS_WITH_AS(volume_and_barycenter(segment),
                         doctest::Contains("intrinsic dimension 1"), DomainError);
}

TEST_CASE("H-test matches convex-combination membership") {
    fixtures::RatGen gen(23);
    const auto P = q_blowup();
    const auto& verts = P.vertices();
    for (int i = 0; i < 80; ++i) {
        const RatVector m = gen.vector(2, 3, 3);
        CHECK(P.contains(m) == in_convex_hull(verts, m));
    }
}
