#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kummerlcp/codes.hpp"
#include "kummerlcp/semigroup.hpp"

namespace kummerlcp {

enum class LcpVariant { W0_A, W0_B, V0, R44_A, R44_B };

std::string variant_name(LcpVariant v);

/// Parameter table of one build, computable without touching matrices.
struct LcpPlan {
    int64_t n = 0, k1 = 0, k2 = 0;
    int64_t d1_design = 0, d2_design = 0;
};

/// Feasibility checks plus the theorem's parameter formulas on a curve
/// signature. Throws named precondition errors; n is the evaluation-set size.
LcpPlan plan_lcp(const CurveSignature& sig, int64_t n, int64_t s, LcpVariant variant);

/// A fully verified LCP build.
struct LcpBuild {
    Divisor G, H;
    std::vector<Place> D;
    LinearCode code_g, code_h;
    LcpCertificate cert;
    LcpPlan plan;
    bool gcd_nonspecial = false;        // gcd(G, H) non-special of degree g-1
    bool lmd_minus_d_nonspecial = false;  // lmd(G, H) - D (reduced mod (h)) non-special
    std::vector<FieldElement> dual_witness;  // code_g = witness . dual(code_h)
};

/// Theorem-driven (G, H) pair on `curve`, evaluated at D (default: all split
/// places). Every claim the theorem makes is re-verified: complementary
/// dimensions, full stacked rank, the two non-speciality hypotheses, and the
/// dual equivalence witness for the W0_A / W0_B / V0 variants. A failed
/// verification throws certificate_error.
LcpBuild build_lcp(const KummerCurve& curve, int64_t s, LcpVariant variant,
                   std::optional<std::vector<Place>> D = std::nullopt);

/// The divisor pair alone (no matrices); exposed for divisor-level tests.
std::pair<Divisor, Divisor> lcp_divisors(const KummerCurve& curve, int64_t s, LcpVariant variant, int64_t n);

/// The group of rational points of a genus-1 curve y^2 = cubic, odd
/// characteristic, with the place at infinity as neutral element.
class EllipticGroup {
public:
    explicit EllipticGroup(const KummerCurve& curve);

    const KummerCurve& curve() const { return *curve_; }
    const std::vector<Place>& points() const { return points_; }
    uint64_t order() const { return points_.size(); }

    Place add(const Place& a, const Place& b) const;
    Place negate(const Place& a) const;
    Place scalar_mul(const Place& a, int64_t k) const;
    int64_t element_order(const Place& a) const;

    /// Z/2^{l1} m1 x Z/2^{l2} m2 decomposition, a | b invariants.
    int64_t l1() const { return l1_; }
    int64_t m1() const { return m1_; }
    int64_t l2() const { return l2_; }
    int64_t m2() const { return m2_; }
    const Place& R1() const { return r1_; }
    const Place& R2() const { return r2_; }

    std::vector<Place> span(const std::vector<Place>& gens) const;

private:
    Place from_xy(bool infinite, FieldElement x, FieldElement y) const;

    const KummerCurve* curve_;
    FieldElement c2_, c1_, c0_;  // y^2 = x^3 + c2 x^2 + c1 x + c0
    std::vector<Place> points_;
    int64_t l1_ = 0, m1_ = 1, l2_ = 0, m2_ = 1;
    Place r1_, r2_;
};

/// Corollary cases: 1/2 need 8 | N (s even / odd), 3/4 need 8 not dividing N
/// (s even / odd). Cases 1 and 3 route through W0_A, 2 and 4 through V0;
/// the evaluation set is the nontrivial coset of <R1, 2R2>, minus the two
/// branch points it contains in cases 3/4.
struct EllMdsBuild {
    LcpBuild lcp;
    bool mds_first = false;
    bool mds_second = false;
    KummerCurve relabeled;  // branch order used by the build (case 3/4 relabeling)
};
EllMdsBuild build_ell_mds(const KummerCurve& curve, int64_t s, int case_id,
                          uint64_t mds_subset_budget = 20000000);

/// LCD codes on the maximal hyperelliptic y^2 = x^q + x over GF(q^2),
/// D = (y^t - 1)_0. Variant 1: G = sum_{i<=g} Q_i + (4g+2) Qinf;
/// variant 2: G = sum_{i<=g} Q_i + (t-2) Q_{2g+1} + (4g+1) Qinf.
struct LcdBuild {
    LinearCode code;    // C_L(D, G)
    LinearCode code_h;  // C_L(D, H) = the exact dual
    Divisor G, H;
    std::vector<Place> D;
    bool lcd = false;
    bool dual_matches = false;  // code_h equals code.dual() as a subspace
    int64_t design_distance = 0;
};
LcdBuild build_lcd_hyp(uint64_t q, int64_t t, int variant);

/// Kawakita-family build (w != 0): routes through V0 after the f(1) power
/// test fixes the evaluation set; checks n against the rational-place count.
LcpBuild build_w_neq0(const KummerCurve& curve, int64_t s);

/// n = N - m - 2 when f(1) = prod(1 - alpha_i) is an mprime-th power, else
/// N - m + mprime - 2.
int64_t kawakita_expected_n(const KummerCurve& curve);

}  // namespace kummerlcp
