#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kummerlcp/gf.hpp"

namespace kummerlcp {

/// One branch x-value of the Kummer model y^m = a * prod (x - xi)^lambda,
/// with its ramification data precomputed.
struct BranchPoint {
    FieldElement x;
    int64_t lambda = 1;  // exponent, in [1, m)
    int64_t r = 1;       // gcd(lambda, m): fiber size over this x-value
    int64_t e = 1;       // m / r: ramification index
    int64_t vy = 0;      // lambda / r: v(y) at every place of the fiber
};

enum class BranchType { U, V, W };  // lambda = 1 / coprime lambda > 1 / gcd(lambda, m) > 1

struct Place {
    enum class Kind { Infinity, Ramified, Split };
    Kind kind = Kind::Infinity;
    int branch = -1;  // Ramified: index into the curve's branch list
    int fiber = 0;    // Ramified: 0 .. r-1 within the fiber
    FieldElement x{}, y{};  // Split only

    static Place infinity() { return {}; }
    static Place ramified(int branch, int fiber) {
        Place p;
        p.kind = Kind::Ramified;
        p.branch = branch;
        p.fiber = fiber;
        return p;
    }
    static Place split(FieldElement x, FieldElement y) {
        Place p;
        p.kind = Kind::Split;
        p.x = x;
        p.y = y;
        return p;
    }

    /// Total-order key: infinity < ramified(branch, fiber) < split(x, y).
    std::tuple<int, uint64_t, uint64_t> key() const {
        switch (kind) {
            case Kind::Infinity: return {0, 0, 0};
            case Kind::Ramified: return {1, static_cast<uint64_t>(branch), static_cast<uint64_t>(fiber)};
            default: return {2, x.v, y.v};
        }
    }
    bool operator==(const Place& o) const { return key() == o.key(); }
    bool operator<(const Place& o) const { return key() < o.key(); }
};

/// Exponent multiset of a curve, enough for all semigroup arithmetic.
struct CurveSignature {
    int64_t m = 0;
    std::vector<int64_t> lambdas;  // one entry per branch x-value

    int64_t u() const;
    int64_t v() const;
    int64_t w() const;
    int64_t lambda0() const;
    int64_t genus() const;
};

/// The Kummer extension y^m = a * prod_i (x - xi_i)^{lambda_i} over F_q with
/// gcd(q, m) = 1 and gcd(lambda0, m) = 1 (single totally ramified place at
/// infinity). Immutable after creation.
class KummerCurve {
public:
    KummerCurve(FieldPtr field, int64_t m, FieldElement a, std::vector<std::pair<FieldElement, int64_t>> branch);

    const FiniteField& field() const { return *field_; }
    FieldPtr field_ptr() const { return field_; }
    int64_t m() const { return m_; }
    FieldElement a() const { return a_; }
    int64_t lambda0() const { return lambda0_; }
    int64_t genus() const { return genus_; }

    const std::vector<BranchPoint>& branch() const { return branch_; }
    BranchType branch_type(int i) const;
    const std::vector<int>& u_indices() const { return u_idx_; }
    const std::vector<int>& v_indices() const { return v_idx_; }
    const std::vector<int>& w_indices() const { return w_idx_; }

    CurveSignature signature() const;

    /// a * prod (x0 - xi)^lambda; zero iff x0 is a branch value.
    FieldElement rhs_at(FieldElement x0) const;

    /// Index of the branch point with this x-value, or -1.
    int branch_index_of(FieldElement x0) const;

    /// Residual unit at a branch point: a * prod_{j != i} (xi_i - xi_j)^{lambda_j}.
    /// The fiber over xi_i is rational iff this is an r_i-th power.
    FieldElement residual_at_branch(int i) const;

    /// True iff all r_i places over branch i are rational.
    bool fiber_rational(int i) const;

    /// The place at infinity plus, in branch order, each rational branch
    /// fiber, then all split places ordered by (x, y).
    std::vector<Place> rational_places() const;

    /// Split places only (complete fibers over non-branch x-values), (x, y) order.
    std::vector<Place> split_places() const;

    uint64_t count_rational_places() const;

    /// N = q + 1 + 2g*sqrt(q) with integral sqrt(q).
    bool is_maximal() const;

    // Valuations at rational places.
    int64_t val_x_minus(const Place& p, FieldElement c) const;  // v_P(x - c)
    int64_t val_y(const Place& p) const;                        // v_P(y)

    std::string equation_str() const;

private:
    FieldPtr field_;
    int64_t m_;
    FieldElement a_;
    std::vector<BranchPoint> branch_;
    std::vector<int> u_idx_, v_idx_, w_idx_;
    int64_t lambda0_ = 0;
    int64_t genus_ = 0;
};

/// Birational normalization of the X_m subcover (constant field F_{q^6}):
/// y^m = -prod(x - alpha_i) * prod(x - beta_j)^lambda * x^dprime with
/// lambda = (q+1)^{-1} mod m and dprime = d * lambda mod m. The sign is
/// folded into y (m is always odd here), so a = 1.
struct XmModel {
    KummerCurve curve;
    int64_t lambda;
    int64_t dprime;
};
XmModel normalize_xm(uint64_t q, int64_t m, int64_t d);

/// Same data without constructing the field: exponents, genus, and the
/// rational-place/evaluation-set sizes implied by maximality over F_{q^6}.
struct XmPlan {
    int64_t lambda, dprime;
    int64_t u, v, lambda0, genus;
    uint64_t n_places, n_eval;
    CurveSignature signature;
};
XmPlan plan_xm(uint64_t q, int64_t m, int64_t d);

/// Y_m subcover normalization (constant field F_{q^{2r}}, r >= 3 odd):
/// y^m = -prod(x - alpha_i) * x^dprime with dprime = -d mod m; sign folded.
struct YmModel {
    KummerCurve curve;
    int64_t dprime;
};
YmModel normalize_ym(uint64_t q, int64_t r, int64_t m, int64_t d);

struct YmPlan {
    int64_t dprime;
    int64_t u, v, lambda0, genus;
    uint64_t n_places, n_eval;
    CurveSignature signature;
};
YmPlan plan_ym(uint64_t q, int64_t r, int64_t m, int64_t d);

/// Hyperelliptic y^2 = prod(x - alpha_i) over GF(q^2) from the maximal family
/// x^{2g+1} + x; branch x-values are the roots, canonically ordered.
KummerCurve hyperelliptic_curve(uint64_t q, int64_t g);

/// The maximal elliptic curve y^2 = x^3 + 1 over GF(p^2), p = 2 mod 3.
KummerCurve elliptic_curve_x3p1(uint64_t p);

/// Kawakita-style curve y^m = x * (x-1)^{mprime} * prod(x - alpha_i) with
/// m | q-1, mprime | m, and m - mprime further branch values.
KummerCurve kawakita_curve(FieldPtr field, int64_t m, int64_t mprime, std::vector<FieldElement> alphas);

}  // namespace kummerlcp
