#pragma once

#include <optional>
#include <random>

#include "kummerlcp/divisor.hpp"
#include "kummerlcp/matrix.hpp"

namespace kummerlcp {

/// Where an AG code came from, kept for design-distance reporting.
struct AgProvenance {
    const KummerCurve* curve = nullptr;
    std::vector<Place> D;
    Divisor G;
    int64_t design_distance = 0;  // n - deg G
};

/// A linear [n, k] code over GF(q), held as a row-reduced generator matrix of
/// full row rank. k = 0 encodes the zero code.
class LinearCode {
public:
    LinearCode() = default;
    /// Row-reduces `gen` and drops zero rows.
    LinearCode(Matrix gen, std::optional<AgProvenance> prov = std::nullopt);

    const FiniteField& field() const { return *gen_.field(); }
    size_t n() const { return gen_.cols(); }
    size_t k() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }
    const std::optional<AgProvenance>& provenance() const { return prov_; }

    LinearCode dual() const;

    /// Codeword for a length-k message row.
    std::vector<FieldElement> encode(const std::vector<FieldElement>& msg) const;

private:
    Matrix gen_;
    std::optional<AgProvenance> prov_;
};

/// C_L(D, G): evaluations of an L(G) basis at the places of D.
/// Requires supp(G) and D disjoint and D free of repeats.
LinearCode ag_code(const KummerCurve& c, const std::vector<Place>& D, const Divisor& G);

struct LcpCertificate {
    size_t k1 = 0, k2 = 0;
    size_t stacked_rank = 0;
    bool verdict = false;
    int64_t security_parameter_bound = 0;  // min of the two design distances when known
};

/// Direct-sum check: verdict iff k1 + k2 = n and the stacked generators have
/// rank n.
LcpCertificate lcp_check(const LinearCode& c1, const LinearCode& c2);

/// C is LCD iff its k x k Gram matrix G G^T is nonsingular.
bool lcd_check(const LinearCode& code);

/// A vector a in (F_q^x)^n with c2 = a . c1 (coordinatewise scaling), if the
/// solved space contains one. The witness is verified before returning.
std::optional<std::vector<FieldElement>> diag_equiv(const LinearCode& c1, const LinearCode& c2,
                                                    uint64_t seed = 0x5eed);

struct DistanceResult {
    int64_t lower_bound = 1;
    bool exact = false;
};

/// Exact distance by message enumeration when q^k fits the budget; otherwise
/// the AG design bound (or the trivial bound 1) flagged non-exact.
DistanceResult min_distance(const LinearCode& code, uint64_t budget = (1ull << 24));

/// True iff every k-subset of generator columns has rank k (d = n - k + 1).
/// Runs on the smaller of the code and its dual.
bool mds_check(const LinearCode& code, uint64_t subset_budget = 10000000);

int64_t hamming_weight(const std::vector<FieldElement>& v);

std::vector<FieldElement> random_codeword(const LinearCode& code, std::mt19937_64& rng);

}  // namespace kummerlcp
