#include <set>

#include "doctest.h"
#include "kummerlcp/constructions.hpp"

using namespace kummerlcp;

namespace {

const KummerCurve& ym541() {
    static KummerCurve c = normalize_ym(2, 3, 3, 1).curve;
    return c;
}

}  // namespace

TEST_CASE("Theorem 4.1 divisors on the Example 5.4(1) curve, s = 3") {
    const KummerCurve& c = ym541();
    auto [G, H] = lcp_divisors(c, 3, LcpVariant::W0_A, 108);
    // G = Q_1 + 2 Q_2 + (108 - 5s) Qinf
    CHECK(G.coeff(Place::ramified(c.u_indices()[0], 0)) == 1);
    CHECK(G.coeff(Place::ramified(c.u_indices()[1], 0)) == 2);
    CHECK(G.coeff(Place::infinity()) == 93);
    CHECK(G.degree() == 96);
    // H = (s+1) Q_1 + s Q_2 + (s-1) Q_3 + (2s+2) Q'_1 - Qinf
    CHECK(H.coeff(Place::ramified(c.u_indices()[0], 0)) == 4);
    CHECK(H.coeff(Place::ramified(c.u_indices()[1], 0)) == 3);
    CHECK(H.coeff(Place::ramified(c.u_indices()[2], 0)) == 2);
    CHECK(H.coeff(Place::ramified(c.v_indices()[0], 0)) == 8);
    CHECK(H.coeff(Place::infinity()) == -1);
    CHECK(H.degree() == 16);
    // gcd(G, H) = sum t Q - Qinf, non-special of degree g - 1
    Divisor gcd_gh = Divisor::gcd(G, H);
    CHECK(gcd_gh.coeff(Place::ramified(c.u_indices()[0], 0)) == 1);
    CHECK(gcd_gh.coeff(Place::ramified(c.u_indices()[1], 0)) == 2);
    CHECK(gcd_gh.coeff(Place::infinity()) == -1);
    CHECK(gcd_gh.degree() == c.genus() - 1);
}

TEST_CASE("Theorem 4.1 build on Example 5.4(1): [108, 109-5s] + [108, 5s-1]") {
    const KummerCurve& c = ym541();
    for (int64_t s : {3, 10, 21}) {
        LcpBuild b = build_lcp(c, s, LcpVariant::W0_A);
        CHECK(b.plan.n == 108);
        CHECK(static_cast<int64_t>(b.code_g.k()) == 109 - 5 * s);
        CHECK(static_cast<int64_t>(b.code_h.k()) == 5 * s - 1);
        CHECK(b.cert.verdict);
        CHECK(b.cert.stacked_rank == 108);
        CHECK(b.plan.d1_design == 5 * s - 3);
        CHECK(b.plan.d2_design == 107 - 5 * s);
        CHECK(b.gcd_nonspecial);
        CHECK(b.lmd_minus_d_nonspecial);
        CHECK_FALSE(b.dual_witness.empty());
    }
    CHECK_THROWS_AS(build_lcp(c, 2, LcpVariant::W0_A), precondition_error);   // s below m
    CHECK_THROWS_AS(build_lcp(c, 22, LcpVariant::W0_A), precondition_error);  // s out of range
}

TEST_CASE("Theorem 4.3 build on Example 5.4(1): [108, 108-4s] + [108, 4s]") {
    const KummerCurve& c = ym541();
    for (int64_t s : {3, 10, 26}) {
        LcpBuild b = build_lcp(c, s, LcpVariant::W0_B);
        CHECK(static_cast<int64_t>(b.code_g.k()) == 108 - 4 * s);
        CHECK(static_cast<int64_t>(b.code_h.k()) == 4 * s);
        CHECK(b.cert.verdict);
        CHECK(b.plan.d1_design == 4 * s - 2);
        CHECK(b.plan.d2_design == 106 - 4 * s);
        CHECK_FALSE(b.dual_witness.empty());
    }
}

TEST_CASE("plans for the X_m and Y_m families at large q") {
    // Example 5.2(1): q = 8, m = 19, d = 1
    XmPlan xp = plan_xm(8, 19, 1);
    int64_t n = static_cast<int64_t>(xp.n_eval);
    for (int64_t s : {19, 40, 100}) {
        LcpPlan a = plan_lcp(xp.signature, n, s, LcpVariant::W0_A);
        CHECK(a.k1 == n - 40 * s + 1);
        CHECK(a.k2 == 40 * s - 1);
        CHECK(a.d1_design == 40 * s - 63);
        LcpPlan b = plan_lcp(xp.signature, n, s, LcpVariant::W0_B);
        CHECK(b.k1 == n - 39 * s);
        CHECK(b.k2 == 39 * s);
        CHECK(b.d1_design == 39 * s - 62);
    }
    // Example 5.4(2): q = 2, r = 9, m = 19
    YmPlan yp = plan_ym(2, 9, 19, 1);
    int64_t ny = static_cast<int64_t>(yp.n_eval);
    LcpPlan a = plan_lcp(yp.signature, ny, 19, LcpVariant::W0_A);
    CHECK(a.k1 == ny - 21 * 19 + 1);
    CHECK(a.d1_design == 21 * 19 - 27);
}

TEST_CASE("elliptic group of y^2 = x^3 + 1 over GF(25)") {
    KummerCurve c = elliptic_curve_x3p1(5);
    EllipticGroup grp(c);
    CHECK(grp.order() == 36);
    // maximal over GF(p^2) means (Z/(p+1))^2
    CHECK(grp.l1() == 1);
    CHECK(grp.m1() == 3);
    CHECK(grp.l2() == 1);
    CHECK(grp.m2() == 3);
    CHECK(grp.element_order(grp.R1()) == 6);
    CHECK(grp.element_order(grp.R2()) == 6);
    CHECK(grp.span({grp.R1(), grp.R2()}).size() == 36);
    // neutral and inverse laws on every point
    for (const Place& p : grp.points()) {
        CHECK(grp.add(p, Place::infinity()) == p);
        CHECK(grp.add(p, grp.negate(p)) == Place::infinity());
    }
    // associativity on a sample of triples
    const auto& pts = grp.points();
    for (size_t i = 0; i < pts.size(); i += 5)
        for (size_t j = 1; j < pts.size(); j += 7)
            for (size_t k = 2; k < pts.size(); k += 11) {
                CHECK(grp.add(grp.add(pts[i], pts[j]), pts[k]) == grp.add(pts[i], grp.add(pts[j], pts[k])));
            }
}

TEST_CASE("Corollary 5.6 cases 3 and 4 at p = 5: MDS LCPs on [16, ...]") {
    KummerCurve c = elliptic_curve_x3p1(5);
    SUBCASE("case 3, s = 2: [16, 11, 6] and [16, 5, 12]") {
        EllMdsBuild b = build_ell_mds(c, 2, 3);
        CHECK(b.lcp.plan.n == 16);
        CHECK(b.lcp.code_g.k() == 11);
        CHECK(b.lcp.code_h.k() == 5);
        CHECK(b.lcp.cert.verdict);
        CHECK(b.mds_first);
        CHECK(b.mds_second);
        // exact distances from the MDS certificate
        CHECK(static_cast<int64_t>(b.lcp.code_g.n() - b.lcp.code_g.k()) + 1 == 6);
        DistanceResult d2 = min_distance(b.lcp.code_h);
        CHECK(d2.exact);
        CHECK(d2.lower_bound == 12);
    }
    SUBCASE("case 4, s = 3: [16, 7, 10] and [16, 9, 8]") {
        EllMdsBuild b = build_ell_mds(c, 3, 4);
        CHECK(b.lcp.plan.n == 16);
        CHECK(b.lcp.code_g.k() == 7);
        CHECK(b.lcp.code_h.k() == 9);
        CHECK(b.lcp.cert.verdict);
        CHECK(b.mds_first);
        CHECK(b.mds_second);
    }
    SUBCASE("parity and case mismatches are rejected") {
        CHECK_THROWS_AS(build_ell_mds(c, 3, 3), precondition_error);  // case 3 needs even s
        CHECK_THROWS_AS(build_ell_mds(c, 2, 1), precondition_error);  // 8 does not divide 36
    }
}

TEST_CASE("Corollary 5.6 cases 1 and 2 at p = 11 (8 | N)") {
    KummerCurve c = elliptic_curve_x3p1(11);
    EllipticGroup grp(c);
    CHECK(grp.order() == 144);
    SUBCASE("case 1, s = 2: [72, 67, 6]") {
        EllMdsBuild b = build_ell_mds(c, 2, 1);
        CHECK(b.lcp.plan.n == 72);
        CHECK(b.lcp.code_g.k() == 72 - 6 + 1);
        CHECK(b.lcp.code_h.k() == 5);
        CHECK(b.mds_first);
        CHECK(b.mds_second);
    }
    SUBCASE("case 2, s = 3: [72, 63, 10]") {
        EllMdsBuild b = build_ell_mds(c, 3, 2);
        CHECK(b.lcp.plan.n == 72);
        CHECK(b.lcp.code_g.k() == 72 - 9);
        CHECK(b.lcp.code_h.k() == 9);
        CHECK(b.mds_first);
        CHECK(b.mds_second);
    }
}

TEST_CASE("Theorem 5.5 third bullet on the elliptic curve: [32, 32-3s, >= 3s]") {
    KummerCurve c = elliptic_curve_x3p1(5);
    LcpBuild b = build_lcp(c, 2, LcpVariant::V0);
    CHECK(b.plan.n == 32);
    CHECK(b.code_g.k() == 32 - 6);
    CHECK(b.code_h.k() == 6);
    CHECK(b.plan.d1_design == 6);  // (2g+1)s + 1 - g = 3s
    CHECK(b.cert.verdict);
}

TEST_CASE("Theorem 5.8 LCD codes at q = 5, g = 2, t = 8") {
    SUBCASE("variant 1: [40, 11, >= 28]") {
        LcdBuild b = build_lcd_hyp(5, 8, 1);
        CHECK(b.code.n() == 40);
        CHECK(b.code.k() == 11);
        CHECK(b.design_distance == 28);
        CHECK(b.lcd);
        CHECK(b.dual_matches);
    }
    SUBCASE("variant 2: [40, 16, >= 23]") {
        LcdBuild b = build_lcd_hyp(5, 8, 2);
        CHECK(b.code.n() == 40);
        CHECK(b.code.k() == 16);
        CHECK(b.design_distance == 23);
        CHECK(b.lcd);
        CHECK(b.dual_matches);
    }
    SUBCASE("t constraints") {
        CHECK_THROWS_AS(build_lcd_hyp(5, 3, 1), precondition_error);
        CHECK_THROWS_AS(build_lcd_hyp(5, 5, 1), precondition_error);
    }
}

TEST_CASE("Remark 4.4 variants on a synthetic curve with v = floor(lambda0/m) + 1") {
    // y^4 = (x)(x-1) (x-a)^3 (x-b)^3 (x-c)^3 over GF(81): u = 2, v = 3,
    // lambda0 = 11, floor = 2
    FieldPtr F = FiniteField::create(3, 4);
    std::vector<std::pair<FieldElement, int64_t>> branch = {
        {F->element(0), 1}, {F->element(1), 1}, {F->element(2), 3}, {F->element(3), 3}, {F->element(4), 3}};
    KummerCurve c(F, 4, F->one(), branch);
    CHECK(c.genus() == 6);
    SemigroupProfile p = profile(c);
    REQUIRE(p.floor_l0_m == 2);
    REQUIRE(p.sig.v() == 3);
    int64_t n = static_cast<int64_t>(c.split_places().size());
    REQUIRE(n > 48);  // s = 4 must be in range for the A variant
    SUBCASE("variant A") {
        LcpBuild b = build_lcp(c, 4, LcpVariant::R44_A);
        CHECK(b.cert.verdict);
        CHECK(static_cast<int64_t>(b.code_g.k() + b.code_h.k()) == n);
        CHECK(static_cast<int64_t>(b.code_g.k()) == n - 11 * 4 + 1);
        CHECK(b.gcd_nonspecial);
        CHECK(b.lmd_minus_d_nonspecial);
    }
    SUBCASE("variant B") {
        LcpBuild b = build_lcp(c, 4, LcpVariant::R44_B);
        CHECK(b.cert.verdict);
        CHECK(static_cast<int64_t>(b.code_g.k()) == n - 8 * 4);
        CHECK(static_cast<int64_t>(b.code_h.k()) == 8 * 4);
    }
    SUBCASE("the standard variant rejects this curve") {
        CHECK_THROWS_AS(build_lcp(c, 4, LcpVariant::W0_A), precondition_error);
    }
}

TEST_CASE("lcp verdict symmetry") {
    const KummerCurve& c = ym541();
    LcpBuild b = build_lcp(c, 3, LcpVariant::W0_A);
    CHECK(lcp_check(b.code_g, b.code_h).verdict == lcp_check(b.code_h, b.code_g).verdict);
}
