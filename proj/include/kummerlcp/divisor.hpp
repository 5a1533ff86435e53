#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kummerlcp/curve.hpp"

namespace kummerlcp {

/// Sparse integer divisor on the rational places of one curve.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(const KummerCurve* curve) : curve_(curve) {}

    const KummerCurve* curve() const { return curve_; }

    int64_t coeff(const Place& p) const;
    void add_place(const Place& p, int64_t c);

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator*(int64_t c) const;
    bool operator==(const Divisor& o) const;

    int64_t degree() const;
    bool is_effective() const;
    std::vector<std::pair<Place, int64_t>> entries() const;
    size_t support_size() const;
    bool in_support(const Place& p) const;

    /// Pointwise min / max (gcd and lmd of divisors).
    static Divisor gcd(const Divisor& a, const Divisor& b);
    static Divisor lmd(const Divisor& a, const Divisor& b);

private:
    const KummerCurve* curve_ = nullptr;
    std::map<std::tuple<int, uint64_t, uint64_t>, std::pair<Place, int64_t>> coeffs_;
};

/// y^t * prod_c (x - c)^{e_c}: the function family all in-scope divisor and
/// Riemann-Roch computations live in. Exponent keys are packed x-values; they
/// may include non-branch c, in which case the fiber over c must split
/// completely for the principal divisor to be supported on rational places.
struct MonomialFunction {
    int64_t t = 0;
    std::map<uint64_t, int64_t> exps;

    bool is_one() const { return t == 0 && exps.empty(); }
    FieldElement eval(const KummerCurve& c, const Place& p) const;  // p must be split
    std::string str(const KummerCurve& c) const;
};

/// Riemann-Roch space of a divisor supported on ramified fibers and infinity.
struct RRSpace {
    std::vector<MonomialFunction> basis;
    int64_t dim = 0;
};

int64_t valuation(const KummerCurve& c, const Place& p, const MonomialFunction& fn);

/// Principal divisor (fn); degree is always 0. Throws if fn has a zero or
/// pole over a non-branch x-value whose fiber is not completely split.
Divisor principal_divisor(const KummerCurve& c, const MonomialFunction& fn);

/// Exact L(G) for G supported on ramified fibers (equal coefficients within
/// each fiber) and the place at infinity, via the per-t monomial
/// decomposition of the Kummer extension.
RRSpace riemann_roch(const KummerCurve& c, const Divisor& G);

int64_t rr_dim(const KummerCurve& c, const Divisor& G);

/// ell(A) == deg A + 1 - g. Divisors of negative degree report true
/// (ell = 0 always holds there).
bool is_nonspecial(const KummerCurve& c, const Divisor& A);

/// A monomial z with G = H + (z), if one exists within the family.
/// Absence only means no monomial witness, not inequivalence.
std::optional<MonomialFunction> linear_equiv_witness(const KummerCurve& c, const Divisor& G, const Divisor& H);

}  // namespace kummerlcp
