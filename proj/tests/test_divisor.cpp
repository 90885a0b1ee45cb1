#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "toralpha/divisor.hpp"

using namespace toralpha;
using fixtures::iv;
using fixtures::rv;

namespace {

bool slope_table_is(const std::vector<RatVector>& slopes,
                    std::initializer_list<std::initializer_list<const char*>> expected) {
    if (slopes.size() != expected.size()) return false;
    size_t i = 0;
    for (const auto& e : expected) {
        if (!exact_eq(slopes[i++], fixtures::rv(e))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("anticanonical coefficients are all one") {
    const Fan blowup = fixtures::blowup_fan();
    const auto mK = anticanonical(blowup);
    CHECK(mK.coefficients == std::vector<Int>{Int(1), Int(1), Int(1), Int(1)});
    CHECK(anticanonical(fixtures::p2_fan()).coefficients.size() == 3);
    CHECK(anticanonical(fixtures::p1_fan()).coefficients.size() == 2);
}

TEST_CASE("support function slopes") {
    const Fan blowup = fixtures::blowup_fan();
    const auto mK = anticanonical(blowup);
    CHECK(slope_table_is(support_function(mK),
                         {{"-1", "0"}, {"0", "-1"}, {"2", "-1"}, {"-1", "2"}}));

    const auto D13 = fixtures::pkl_divisor(blowup, 1, 3);
    CHECK(slope_table_is(support_function(D13),
                         {{"0", "1"}, {"1", "0"}, {"3", "0"}, {"0", "3"}}));

    ToricDivisor zero{&blowup, {Int(0), Int(0), Int(0), Int(0)}};
    for (const auto& v : support_function(zero)) CHECK(exact_eq(v, rv({"0", "0"})));
}

TEST_CASE("support function agrees across shared cone faces") {
    const Fan blowup = fixtures::blowup_fan();
    const auto mK = anticanonical(blowup);
    const auto slopes = support_function(mK);
    // Each ray sits on the wall of two cones; both linear pieces evaluate to -a.
    for (size_t c = 0; c < blowup.max_cones.size(); ++c) {
        for (int r : blowup.max_cones[c]) {
            CHECK(dot(blowup.rays[static_cast<size_t>(r)], slopes[c]) == -1);
        }
    }
}

TEST_CASE("polytope of a divisor") {
    const Fan blowup = fixtures::blowup_fan();
    const auto P13 = polytope_of(fixtures::pkl_divisor(blowup, 1, 3));
    const auto& v = P13.vertices();
    REQUIRE(v.size() == 4);
    CHECK(exact_eq(v[0], rv({"0", "1"})));
    CHECK(exact_eq(v[1], rv({"0", "3"})));
    CHECK(exact_eq(v[2], rv({"1", "0"})));
    CHECK(exact_eq(v[3], rv({"3", "0"})));

    // Q = (-1,-1) + P(1,3).
    const auto Q = polytope_of(anticanonical(blowup));
    const auto& qv = Q.vertices();
    REQUIRE(qv.size() == 4);
    CHECK(exact_eq(qv[0], rv({"-1", "0"})));
    CHECK(exact_eq(qv[1], rv({"-1", "2"})));
    CHECK(exact_eq(qv[2], rv({"0", "-1"})));
    CHECK(exact_eq(qv[3], rv({"2", "-1"})));

    const auto Qp2 = polytope_of(anticanonical(fixtures::p2_fan()));
    REQUIRE(Qp2.vertices().size() == 3);
    CHECK(exact_eq(Qp2.vertices()[0], rv({"-1", "-1"})));
}

TEST_CASE("nef / big / ample predicates") {
    const Fan blowup = fixtures::blowup_fan();
    const auto D13 = fixtures::pkl_divisor(blowup, 1, 3);
    CHECK(is_nef(D13).nef);
    CHECK(is_big(D13));
    CHECK(is_ample(D13));

    ToricDivisor bad{&blowup, {Int(0), Int(0), Int(0), Int(-1)}};
    const auto nef = is_nef(bad);
    CHECK_FALSE(nef.nef);
    // The witness really violates concavity: <v_sigma, u_rho> < -a_rho.
    REQUIRE(nef.violating_cone >= 0);
    const auto slopes = support_function(bad);
    CHECK(dot(blowup.rays[static_cast<size_t>(nef.violating_ray)],
              slopes[static_cast<size_t>(nef.violating_cone)]) <
          Rat(-bad.coefficients[static_cast<size_t>(nef.violating_ray)]));
    // The pair named in the hand derivation violates too.
    CHECK(dot(blowup.rays[2], slopes[3]) < Rat(-bad.coefficients[2]));

    ToricDivisor zero{&blowup, {Int(0), Int(0), Int(0), Int(0)}};
    CHECK(is_nef(zero).nef);
    CHECK_FALSE(is_big(zero));
    CHECK_FALSE(is_ample(zero));

    // Pullback of a line from P^2: nef but not ample (slope collision).
    ToricDivisor pullback{&blowup, {Int(0), Int(0), Int(0), Int(1)}};
    CHECK(is_nef(pullback).nef);
    CHECK(is_big(pullback));
    CHECK_FALSE(is_ample(pullback));
}

TEST_CASE("Batyrev-Tschinkel body recovers the polytope of a nef divisor") {
    const Fan blowup = fixtures::blowup_fan();
    for (const auto& D : {anticanonical(blowup), fixtures::pkl_divisor(blowup, 1, 3),
                          ToricDivisor{&blowup, {Int(0), Int(0), Int(0), Int(1)}}}) {
        const auto body = batyrev_tschinkel_newton_body(D);
        const auto& verts = polytope_of(D).vertices();
        REQUIRE(body.points.size() == verts.size());
        for (size_t i = 0; i < verts.size(); ++i) CHECK(exact_eq(body.points[i], verts[i]));
    }
    ToricDivisor zero{&blowup, {Int(0), Int(0), Int(0), Int(0)}};
    const auto origin_only = batyrev_tschinkel_newton_body(zero);
    REQUIRE(origin_only.points.size() == 1);
    CHECK(exact_eq(origin_only.points[0], rv({"0", "0"})));

    ToricDivisor notnef{&blowup, {Int(0), Int(0), Int(0), Int(-1)}};
    CHECK_THROWS_AS(batyrev_tschinkel_newton_body(notnef), DomainError);
}

TEST_CASE("nef facet inequalities are tight") {
    const Fan blowup = fixtures::blowup_fan();
    const auto D = fixtures::pkl_divisor(blowup, 2, 5);
    const auto& verts = polytope_of(D).vertices();
    for (size_t r = 0; r < blowup.rays.size(); ++r) {
        Rat mn = dot(blowup.rays[r], verts[0]);
        for (const auto& v : verts) mn = std::min(mn, dot(blowup.rays[r], v), std::less<Rat>());
        CHECK(mn == Rat(-D.coefficients[r]));
    }
}

TEST_CASE("linear equivalence shifts everything in lockstep") {
    const Fan blowup = fixtures::blowup_fan();
    const auto D = fixtures::pkl_divisor(blowup, 1, 3);
    const IntVector m = iv({1, 1});
    ToricDivisor shifted{&blowup, D.coefficients};
    for (size_t r = 0; r < blowup.rays.size(); ++r) {
        Rat pairing = dot(blowup.rays[r], to_rat(m));
        shifted.coefficients[r] += numerator(pairing);
    }
    // Shifted divisor is the anticanonical one: Q = (-1,-1) + P(1,3).
    CHECK(shifted.coefficients == anticanonical(blowup).coefficients);

    CHECK(is_nef(shifted).nef == is_nef(D).nef);
    CHECK(is_big(shifted) == is_big(D));
    CHECK(is_ample(shifted) == is_ample(D));

    const auto sv = support_function(shifted);
    const auto dv = support_function(D);
    const RatVector mr = to_rat(m);
    for (size_t c = 0; c < sv.size(); ++c) CHECK(exact_eq(sv[c], RatVector(dv[c] - mr)));

    const auto& pv = polytope_of(D).vertices();
    const auto& sp = polytope_of(shifted).vertices();
    REQUIRE(pv.size() == sp.size());
    for (size_t i = 0; i < pv.size(); ++i) CHECK(exact_eq(sp[i], RatVector(pv[i] - mr)));
}
