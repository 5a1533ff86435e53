#pragma once

#include <optional>
#include <vector>

#include "kummerlcp/curve.hpp"
#include "kummerlcp/divisor.hpp"

namespace kummerlcp {

/// The ell/s/V_F data of a Kummer extension, indexed by t = 1..m-1.
struct SemigroupProfile {
    CurveSignature sig;
    int64_t genus = 0;
    int64_t lambda0 = 0;
    int64_t floor_l0_m = 0;              // floor(lambda0 / m)
    std::vector<int64_t> S;              // S[t-1] = S_t = ell_t
    std::vector<int64_t> s;              // s[t-1] = s_t
    std::vector<int64_t> s_prefix;       // s_prefix[t-1] = s'_t = sum_{i<t} s_i
    std::vector<int64_t> V_F;            // sorted distinct lambda_j with f_j(t) >= 0 for all t
    std::optional<int64_t> negative_s_t; // smallest t in [1, m-2] with s_t < 0

    int64_t ell(int64_t t) const { return S[static_cast<size_t>(t - 1)]; }
    int64_t s_t(int64_t t) const { return s[static_cast<size_t>(t - 1)]; }
    int64_t s_prefix_t(int64_t t) const { return s_prefix[static_cast<size_t>(t - 1)]; }
    bool feasible() const { return !negative_s_t.has_value(); }
};

SemigroupProfile profile(const CurveSignature& sig);
inline SemigroupProfile profile(const KummerCurve& c) { return profile(c.signature()); }

/// f_j(t) for the v-type exponent lambda_j (uses lambda = lambda_j^{-1} mod m).
int64_t f_value(const CurveSignature& sig, int64_t lambda_j, int64_t t);

/// The finite gap list of Gamma^+ at a fully ramified place: the complement
/// of the one-point Weierstrass semigroup. For a u-type place the gaps are
/// {m*mu + t : 0 <= mu <= S_t - 2}; for a v-type place the mu bound is f_j(t).
std::vector<int64_t> gamma_single_gaps(const SemigroupProfile& prof, const KummerCurve& c, const Place& p);

/// Gamma^+ of a tuple of distinct u/v-type places (2 <= l <= u+v): vectors
/// (m*mu_i + t_i) with sum(mu) = S_t - l, where t_i = t at u-places and
/// t * lambda_j mod m at v-places.
std::vector<std::vector<int64_t>> gamma_tuple(const SemigroupProfile& prof, const KummerCurve& c,
                                              const std::vector<Place>& places);

/// Sufficient non-speciality test for an effective degree-g divisor
/// A = sum alpha_i Q_i: true iff no nonzero gamma in the minimal generating
/// set of the Weierstrass semigroup satisfies gamma <= alpha coordinatewise.
bool nonspecial_criterion(const KummerCurve& c, const std::vector<Place>& places, const std::vector<int64_t>& alpha);

/// How the (m-1)-weighted slots of the degree-g divisor pick their places.
struct PSlotPolicy {
    enum class Kind { UFirst, VFirst, RemarkK };
    Kind kind = Kind::UFirst;
    int64_t k = 0;  // RemarkK: how many slots go to v-type places

    static PSlotPolicy u_first() { return {}; }
    static PSlotPolicy v_first() { return {Kind::VFirst, 0}; }
    static PSlotPolicy remark_k(int64_t k) { return {Kind::RemarkK, k}; }
};

/// The effective non-special divisor of degree g:
/// A = sum_t t * (s_t fully ramified places) + (m-1) * (s_{m-1} places),
/// with places consumed in branch-list order. Throws a named
/// precondition_error when infeasible (s_t < 0, V_F violation, v/w bounds).
Divisor build_nonspecial_g(const KummerCurve& c, PSlotPolicy policy = PSlotPolicy::u_first());

/// A - P for P not in supp(A); default P is the place at infinity.
Divisor build_nonspecial_g_minus_1(const KummerCurve& c, std::optional<Place> sub = std::nullopt,
                                   PSlotPolicy policy = PSlotPolicy::u_first());

// Floor/ceiling identities, exported for the property suites.
int64_t floor_div_i64(int64_t a, int64_t b);
int64_t ceil_div_i64(int64_t a, int64_t b);

/// floor(-a/b) == -ceil(a/b), and ceil - floor is the integrality indicator.
bool floor_ceil_identity_holds(int64_t a, int64_t b);

/// sum_{k=1}^{b-1} floor(ka/b) == ((a-1)(b-1) + gcd(a,b) - 1) / 2.
bool floor_sum_identity_holds(int64_t a, int64_t b);

/// ceil((k+1)L/m) - ceil(kL/m), which is 1 exactly when k = floor(l*m/L)
/// for some 1 <= l <= L-1 and 0 otherwise (1 <= L < m, 1 <= k <= m-2).
struct CeilIncrement {
    int64_t delta;
    bool at_jump;
};
CeilIncrement ceil_increment(int64_t lambda, int64_t m, int64_t k);

}  // namespace kummerlcp
