#include <set>

#include "doctest.h"
#include "kummerlcp/curve.hpp"

using namespace kummerlcp;

namespace {

// y^4 = x (x-2)(x-3) (x-1)^2 over GF(5): the shape of Example 3.4(3)
KummerCurve kawakita_small() {
    FieldPtr F = FiniteField::create(5, 1);
    return kawakita_curve(F, 4, 2, {F->scalar(2), F->scalar(3)});
}

}  // namespace

TEST_CASE("curve_create validates the Kummer invariants") {
    FieldPtr F = FiniteField::create(5, 1);
    // gcd(q, m) != 1
    CHECK_THROWS_AS(KummerCurve(F, 5, F->one(), {{F->scalar(1), 1}}), precondition_error);
    // lambda0 = 0 mod m
    CHECK_THROWS_AS(KummerCurve(F, 2, F->one(), {{F->scalar(0), 1}, {F->scalar(1), 1}}), precondition_error);
    // duplicate x-values
    CHECK_THROWS_AS(KummerCurve(F, 3, F->one(), {{F->scalar(1), 1}, {F->scalar(1), 1}}), precondition_error);
    // a = 0
    CHECK_THROWS_AS(KummerCurve(F, 2, F->zero(), {{F->scalar(1), 1}}), precondition_error);
}

TEST_CASE("Y_m normalization at q=2, r=3 reproduces Example 5.4(1)") {
    YmModel model = normalize_ym(2, 3, 3, 1);
    CHECK(model.dprime == 2);
    const KummerCurve& c = model.curve;
    CHECK(c.field().order() == 64);
    CHECK(c.m() == 3);
    CHECK(c.lambda0() == 5);
    CHECK(c.genus() == 3);
    CHECK(c.u_indices().size() == 3);
    CHECK(c.v_indices().size() == 1);
    // branch x-values: the cube roots of unity and 0
    std::set<uint64_t> xs;
    for (const BranchPoint& b : c.branch()) xs.insert(b.x.v);
    CHECK(xs.count(0) == 1);
    CHECK(xs.count(1) == 1);
    for (const BranchPoint& b : c.branch()) {
        if (b.x.is_zero()) continue;
        CHECK(c.field().pow(b.x, 3) == c.field().one());
    }
    CHECK(c.count_rational_places() == 113);
    CHECK(c.is_maximal());
    CHECK(c.split_places().size() == 108);
}

TEST_CASE("Y_m plan at q=2, r=9, m=19") {
    YmPlan plan = plan_ym(2, 9, 19, 1);
    CHECK(plan.dprime == 18);
    CHECK(plan.u == 3);
    CHECK(plan.lambda0 == 21);
    CHECK(plan.genus == 27);
}

TEST_CASE("X_m normalization plans") {
    XmPlan p1 = plan_xm(8, 19, 1);
    CHECK(p1.lambda == 17);
    CHECK(p1.dprime == 17);
    CHECK(p1.genus == 63);
    CHECK(p1.lambda0 == 40);
    CHECK(p1.n_eval == 326648);

    // q=5, m=7, d=1: the Example 3.4(1) curve y^7 = (x-2)(x-3)(x-4) x^6 (x-1)^6
    XmPlan p2 = plan_xm(5, 7, 1);
    CHECK(p2.lambda == 6);
    CHECK(p2.dprime == 6);
    CHECK(p2.genus == 12);
    // defining congruence of lambda
    for (auto [q, m, d] : std::vector<std::tuple<uint64_t, int64_t, int64_t>>{{8, 19, 1}, {5, 7, 1}, {3, 7, 1}}) {
        XmPlan p = plan_xm(q, m, d);
        CHECK((p.lambda * (static_cast<int64_t>(q) + 1)) % m == 1);
        CHECK(p.dprime == (d * p.lambda) % m);
    }
    CHECK_THROWS_AS(plan_xm(8, 19, 2), precondition_error);  // d = 2 does not divide q+1 = 9
}

TEST_CASE("X_m normalization at q=5 materializes the Example 3.4(1) model") {
    XmModel model = normalize_xm(5, 7, 1);
    const KummerCurve& c = model.curve;
    CHECK(model.lambda == 6);
    CHECK(model.dprime == 6);
    CHECK(c.m() == 7);
    CHECK(c.genus() == 12);
    // branch: alpha in {2,3,4} with exponent 1, beta = 1 with exponent 6, 0 with exponent 6
    REQUIRE(c.branch().size() == 5);
    std::set<uint64_t> alphas, betas;
    for (const BranchPoint& b : c.branch()) {
        if (b.lambda == 1)
            alphas.insert(b.x.v);
        else {
            CHECK(b.lambda == 6);
            betas.insert(b.x.v);
        }
    }
    CHECK(alphas == std::set<uint64_t>{2, 3, 4});
    CHECK(betas == std::set<uint64_t>{0, 1});
}

TEST_CASE("valuation table entries") {
    YmModel model = normalize_ym(2, 3, 3, 1);
    const KummerCurve& c = model.curve;
    // v at infinity
    CHECK(c.val_y(Place::infinity()) == -5);
    CHECK(c.val_x_minus(Place::infinity(), c.field().zero()) == -3);
    // totally ramified alpha place: v(x - alpha) = m, v(y) = 1
    int i0 = c.u_indices()[0];
    Place q1 = Place::ramified(i0, 0);
    CHECK(c.val_x_minus(q1, c.branch()[static_cast<size_t>(i0)].x) == 3);
    CHECK(c.val_y(q1) == 1);
    // the x = 0 place has lambda = 2: v(y) = 2
    int iv = c.v_indices()[0];
    CHECK(c.val_y(Place::ramified(iv, 0)) == 2);
}

TEST_CASE("gamma fiber places and the residue power test") {
    KummerCurve c = kawakita_small();
    REQUIRE(c.w_indices().size() == 1);
    int wi = c.w_indices()[0];
    CHECK(c.branch()[static_cast<size_t>(wi)].r == 2);
    CHECK(c.branch()[static_cast<size_t>(wi)].e == 2);
    // residual at x=1: 1 * (1-2)(1-3) = (-1)(-2) = 2, a nonresidue mod 5
    CHECK(c.residual_at_branch(wi) == c.field().scalar(2));
    CHECK_FALSE(c.fiber_rational(wi));
    // fiber places excluded from the rational list
    for (const Place& p : c.rational_places()) {
        if (p.kind == Place::Kind::Ramified) CHECK(p.branch != wi);
    }
}

TEST_CASE("principal divisor degrees vanish fiberwise (count check)") {
    YmModel model = normalize_ym(2, 3, 3, 1);
    const KummerCurve& c = model.curve;
    // N = #splits + #ramified-rational + 1
    uint64_t n_split = c.split_places().size();
    uint64_t n_ram = 0;
    for (size_t i = 0; i < c.branch().size(); ++i)
        if (c.fiber_rational(static_cast<int>(i))) n_ram += static_cast<uint64_t>(c.branch()[i].r);
    CHECK(c.count_rational_places() == n_split + n_ram + 1);
}

TEST_CASE("elliptic y^2 = x^3 + 1 over GF(25) is maximal with 36 places") {
    KummerCurve c = elliptic_curve_x3p1(5);
    CHECK(c.genus() == 1);
    CHECK(c.count_rational_places() == 36);
    CHECK(c.is_maximal());
}

TEST_CASE("y^2 = x^3 + 1 over GF(7) is not maximal") {
    // genus 1 over a non-square field: the Weil bound is irrational
    FieldPtr F = FiniteField::create(7, 1);
    std::vector<FieldElement> roots = F->nth_roots(-F->one(), 3);
    REQUIRE(roots.size() == 3);  // -1 has three cube roots mod 7
    std::vector<std::pair<FieldElement, int64_t>> branch;
    for (const FieldElement& r : roots) branch.push_back({r, 1});
    KummerCurve c(F, 2, F->one(), branch);
    CHECK(c.genus() == 1);
    CHECK_FALSE(c.is_maximal());
}

TEST_CASE("hyperelliptic y^2 = x^5 + x over GF(25)") {
    KummerCurve c = hyperelliptic_curve(5, 2);
    CHECK(c.genus() == 2);
    CHECK(c.branch().size() == 5);
    CHECK(c.is_maximal());  // N = 25 + 1 + 2*2*5 = 46
    CHECK(c.count_rational_places() == 46);
}
