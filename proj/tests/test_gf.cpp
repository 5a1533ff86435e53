#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "kummerlcp/gf.hpp"

using namespace kummerlcp;

namespace {

FieldElement random_element(const FiniteField& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> d(0, F.order() - 1);
    return F.element(d(rng));
}

FieldElement random_nonzero(const FiniteField& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> d(1, F.order() - 1);
    return F.element(d(rng));
}

}  // namespace

TEST_CASE("prime field basics") {
    FieldPtr F2 = FiniteField::create(2, 1);
    CHECK(F2->order() == 2);
    CHECK((F2->one() + F2->one()).is_zero());
    std::vector<FieldElement> all = F2->elements();
    REQUIRE(all.size() == 2);
    CHECK(all[0].is_zero());
    CHECK(all[1] == F2->one());
}

TEST_CASE("field_create rejects bad inputs") {
    CHECK_THROWS_AS(FiniteField::create(4, 1), precondition_error);
    CHECK_THROWS_AS(FiniteField::create(2, 0), precondition_error);
    CHECK_THROWS_AS(FiniteField::create(3, 64), precondition_error);
}

TEST_CASE("canonical moduli are the lex-smallest irreducibles") {
    CHECK(FiniteField::create(2, 2)->modulus() == std::vector<int64_t>{1, 1, 1});
    // x^2 + x + 1 has discriminant -3, a nonresidue mod 5
    CHECK(FiniteField::create(5, 2)->modulus() == std::vector<int64_t>{1, 1, 1});
    // -1 is a nonresidue mod 11
    CHECK(FiniteField::create(11, 2)->modulus() == std::vector<int64_t>{1, 0, 1});
}

TEST_CASE("GF(25) inverse law on random nonzero elements") {
    FieldPtr F = FiniteField::create(5, 2);
    CHECK(F->order() == 25);
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 50; ++i) {
        FieldElement a = random_nonzero(*F, rng);
        CHECK(a * a.inv() == F->one());
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(987654321);
    for (auto [p, k] : {std::pair<uint64_t, int>{2, 6}, {5, 2}, {7, 1}, {11, 2}, {3, 3}}) {
        FieldPtr F = FiniteField::create(p, k);
        for (int i = 0; i < 1000; ++i) {
            FieldElement a = random_element(*F, rng), b = random_element(*F, rng), c = random_element(*F, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
        }
        // Frobenius is additive
        for (int i = 0; i < 200; ++i) {
            FieldElement a = random_element(*F, rng), b = random_element(*F, rng);
            CHECK((a + b).pow(static_cast<int64_t>(p)) ==
                  a.pow(static_cast<int64_t>(p)) + b.pow(static_cast<int64_t>(p)));
        }
        for (int i = 0; i < 200; ++i) {
            FieldElement a = random_nonzero(*F, rng);
            CHECK(a.pow(static_cast<int64_t>(F->order() - 1)) == F->one());
        }
    }
}

TEST_CASE("GF(2^18) generator order divides 262143 and is full") {
    FieldPtr F = FiniteField::create(2, 18);
    CHECK(F->order() == 262144);
    FieldElement g = F->multiplicative_generator();
    CHECK(g.pow(262143) == F->one());
    for (uint64_t d : distinct_prime_factors(262143)) {
        CHECK_FALSE(g.pow(static_cast<int64_t>(262143 / d)) == F->one());
    }
}

TEST_CASE("nth_roots counts and exactness") {
    FieldPtr F64 = FiniteField::create(2, 6);
    auto cubes_of_one = F64->nth_roots(F64->one(), 3);
    CHECK(cubes_of_one.size() == 3);
    for (const FieldElement& y : cubes_of_one) CHECK(y.pow(3) == F64->one());

    FieldPtr F25 = FiniteField::create(5, 2);
    auto z = F25->nth_roots(F25->zero(), 2);
    REQUIRE(z.size() == 1);
    CHECK(z[0].is_zero());

    // GF(4): the cube roots of 1 are the whole multiplicative group,
    // cross-checked by exhaustive search
    FieldPtr F4 = FiniteField::create(2, 2);
    std::set<uint64_t> expected;
    for (const FieldElement& y : F4->elements())
        if (!y.is_zero() && y.pow(3) == F4->one()) expected.insert(y.v);
    auto got = F4->nth_roots(F4->one(), 3);
    std::set<uint64_t> got_set;
    for (const FieldElement& y : got) got_set.insert(y.v);
    CHECK(got_set == expected);
    CHECK(got_set.size() == 3);

    // gcd law on random targets
    std::mt19937_64 rng(777);
    for (int i = 0; i < 200; ++i) {
        FieldElement c = random_nonzero(*F64, rng);
        auto roots = F64->nth_roots(c, 9);
        CHECK((roots.size() == 0 || roots.size() == gcd_u64(9, 63)));
        for (const FieldElement& y : roots) CHECK(y.pow(9) == c);
    }
}

TEST_CASE("element enumeration is duplicate-free and budget-guarded") {
    FieldPtr F = FiniteField::create(5, 2);
    auto all = F->elements();
    CHECK(all.size() == 25);
    std::set<uint64_t> vals;
    for (const FieldElement& e : all) vals.insert(e.v);
    CHECK(vals.size() == 25);

    FieldPtr big = FiniteField::create(2, 30);
    big->set_enumeration_budget(1 << 20);
    CHECK_THROWS_AS(big->elements(), budget_error);
}

TEST_CASE("GF(64) has 22 distinct cube values") {
    // |{y^3}| = 63/3 + 1 counting zero
    FieldPtr F = FiniteField::create(2, 6);
    std::set<uint64_t> cubes;
    for (const FieldElement& y : F->elements()) cubes.insert(y.pow(3).v);
    CHECK(cubes.size() == 22);
}

TEST_CASE("serialization round-trips and matches the digit convention") {
    FieldPtr F25 = FiniteField::create(5, 2);
    FieldElement e = F25->element(3 + 1 * 5);  // 3 + 1*xbar
    CHECK(e.str() == "31");
    CHECK(F25->parse("31") == e);
    FieldPtr F121 = FiniteField::create(11, 2);
    FieldElement u = F121->element(11);  // xbar
    CHECK(u.str() == "0.1");
    CHECK(F121->parse("0.1") == u);
    CHECK_THROWS_AS(F121->parse("0.11.2"), precondition_error);
}

TEST_CASE("example 5.11 arithmetic: f(1) = 1 under the recorded modulus") {
    // u^2 = 4u + 9, i.e. modulus x^2 + 7x + 2 over GF(11)
    FieldPtr F = FiniteField::create_with_modulus(11, 2, {2, 7, 1});
    FieldElement u = F->element(11);
    FieldElement one = F->one();
    FieldElement f1 = (one - u - F->scalar(5)) * (one - F->scalar(10) * u - F->scalar(9));
    CHECK(f1 == one);
}

TEST_CASE("mixed-field operands are rejected") {
    FieldPtr a = FiniteField::create(5, 2);
    FieldPtr b = FiniteField::create(5, 2);
    CHECK_THROWS_AS(a->one() + b->one(), precondition_error);
    CHECK_THROWS_AS(a->zero().inv(), precondition_error);
}
