#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "kummerlcp/errors.hpp"

namespace kummerlcp {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// An element of a FiniteField. Stored as the packed value sum(c_i * p^i)
/// of its coordinates w.r.t. the power basis of the field modulus.
struct FieldElement {
    const FiniteField* field = nullptr;
    uint64_t v = 0;

    FieldElement() = default;
    FieldElement(const FiniteField* f, uint64_t value) : field(f), v(value) {}

    bool is_zero() const { return v == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(int64_t e) const;

    bool operator==(const FieldElement& o) const { return field == o.field && v == o.v; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::vector<uint64_t> coords() const;
    std::string str() const;
};

/// GF(p^k) with a deterministically chosen modulus (ks >= 1, p prime,
/// p^k <= 2^63). Immutable after construction; all operations are pure.
///
/// Elements are packed base-p digit vectors, so the natural 0..order-1
/// enumeration is the canonical element order used everywhere for
/// deterministic output.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
public:
    /// Modulus = lexicographically smallest monic irreducible of degree k,
    /// coefficients compared low-degree-first. For k = 1 the modulus is the
    /// formal polynomial x and elements are plain residues.
    static FieldPtr create(uint64_t p, int k);

    /// Same field arithmetic but with a caller-supplied modulus
    /// (ascending coefficients, monic, irreducible; length k+1).
    static FieldPtr create_with_modulus(uint64_t p, int k, std::vector<int64_t> modulus);

    uint64_t characteristic() const { return p_; }
    int degree() const { return k_; }
    uint64_t order() const { return order_; }
    const std::vector<int64_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    /// Element with the given packed value (canonical index).
    FieldElement element(uint64_t packed) const;
    /// The image of the integer n under Z -> GF(p) -> GF(p^k).
    FieldElement scalar(int64_t n) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, int64_t e) const;

    /// A fixed generator of the multiplicative group.
    FieldElement multiplicative_generator() const;

    /// All y with y^n = c, sorted by packed value. For c = 0 returns {0}.
    /// Count is gcd(n, order-1) or 0 for c != 0.
    std::vector<FieldElement> nth_roots(FieldElement c, uint64_t n) const;

    /// gcd(n, order-1): the size of a nonempty n-th root fiber.
    uint64_t root_count_bound(uint64_t n) const;

    /// All elements in canonical order. Guarded by the enumeration budget.
    std::vector<FieldElement> elements() const;

    uint64_t enumeration_budget() const { return enum_budget_; }
    void set_enumeration_budget(uint64_t b) const { enum_budget_ = b; }

    /// Base-p digit string, low-degree first ("31" = 3 + 1*xbar in GF(25)).
    /// Fields with p > 10 separate digits with '.'.
    std::string serialize(FieldElement a) const;
    FieldElement parse(const std::string& s) const;

    std::string describe() const;  // "GF(p^k)" human label

private:
    FiniteField(uint64_t p, int k, std::vector<int64_t> modulus);

    uint64_t pow_nolut(uint64_t a, uint64_t e) const;
    uint64_t mul_nolut(uint64_t a, uint64_t b) const;
    void build_tables();
    uint64_t find_generator_value() const;

    uint64_t p_;
    int k_;
    uint64_t order_;
    std::vector<int64_t> modulus_;
    mutable uint64_t enum_budget_ = (1ull << 24);

    // exp/log tables w.r.t. the canonical generator, built when order is small.
    bool has_tables_ = false;
    std::vector<uint64_t> exp_;   // exp_[i] = g^i, length order-1
    std::vector<uint64_t> log_;   // log_[v] for v != 0
    uint64_t generator_value_ = 0;
    std::vector<uint64_t> group_factors_;  // distinct prime factors of order-1
};

bool is_prime_u64(uint64_t n);
std::vector<uint64_t> distinct_prime_factors(uint64_t n);
uint64_t gcd_u64(uint64_t a, uint64_t b);
int64_t mod_inverse(int64_t a, int64_t m);  // inverse of a mod m, in [0, m)

}  // namespace kummerlcp
