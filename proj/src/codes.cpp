#include "kummerlcp/codes.hpp"

#include <algorithm>
#include <numeric>

namespace kummerlcp {

LinearCode::LinearCode(Matrix gen, std::optional<AgProvenance> prov) : prov_(std::move(prov)) {
    std::vector<size_t> pivots = gen.rref();
    Matrix reduced(gen.field(), pivots.size(), gen.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (size_t c = 0; c < gen.cols(); ++c) reduced.set(r, c, gen.at(r, c));
    gen_ = std::move(reduced);
}

LinearCode LinearCode::dual() const { return LinearCode(gen_.nullspace()); }

std::vector<FieldElement> LinearCode::encode(const std::vector<FieldElement>& msg) const {
    if (msg.size() != k()) throw precondition_error("encode: message length != k");
    const FiniteField& F = field();
    std::vector<FieldElement> out(n(), F.zero());
    for (size_t i = 0; i < k(); ++i) {
        if (msg[i].is_zero()) continue;
        for (size_t c = 0; c < n(); ++c) out[c] = out[c] + msg[i] * gen_.at(i, c);
    }
    return out;
}

LinearCode ag_code(const KummerCurve& c, const std::vector<Place>& D, const Divisor& G) {
    for (size_t i = 0; i < D.size(); ++i) {
        if (G.in_support(D[i])) throw precondition_error("ag_code: supp(G) meets D");
        for (size_t j = i + 1; j < D.size(); ++j)
            if (D[i] == D[j]) throw precondition_error("ag_code: repeated place in D");
    }
    RRSpace L = riemann_roch(c, G);
    Matrix gen(&c.field(), static_cast<size_t>(L.dim), D.size());
    for (size_t r = 0; r < L.basis.size(); ++r)
        for (size_t col = 0; col < D.size(); ++col) gen.set(r, col, L.basis[r].eval(c, D[col]));
    AgProvenance prov;
    prov.curve = &c;
    prov.D = D;
    prov.G = G;
    prov.design_distance = static_cast<int64_t>(D.size()) - G.degree();
    LinearCode code(std::move(gen), std::move(prov));
    // The evaluation map is injective whenever deg G < n, so the generator
    // rank must equal ell(G); anything else is an implementation bug.
    if (G.degree() < static_cast<int64_t>(D.size()) && code.k() != static_cast<size_t>(L.dim))
        throw certificate_error("ag_code: evaluation matrix rank != ell(G)");
    return code;
}

LcpCertificate lcp_check(const LinearCode& c1, const LinearCode& c2) {
    if (c1.n() != c2.n() || &c1.field() != &c2.field())
        throw precondition_error("lcp_check: mismatched length or field");
    LcpCertificate cert;
    cert.k1 = c1.k();
    cert.k2 = c2.k();
    cert.stacked_rank = Matrix::vstack(c1.generator(), c2.generator()).rank();
    cert.verdict = (cert.k1 + cert.k2 == c1.n()) && (cert.stacked_rank == c1.n());
    int64_t d1 = c1.provenance() ? c1.provenance()->design_distance : 0;
    int64_t d2 = c2.provenance() ? c2.provenance()->design_distance : 0;
    cert.security_parameter_bound = std::min(d1, d2) > 0 ? std::min(d1, d2) : 0;
    return cert;
}

bool lcd_check(const LinearCode& code) {
    if (code.k() == 0) throw precondition_error("lcd_check: k must be >= 1");
    Matrix gram = code.generator() * code.generator().transpose();
    return gram.rank() == code.k();
}

std::optional<std::vector<FieldElement>> diag_equiv(const LinearCode& c1, const LinearCode& c2, uint64_t seed) {
    if (c1.n() != c2.n() || &c1.field() != &c2.field()) throw precondition_error("diag_equiv: shape mismatch");
    if (c1.k() != c2.k()) throw precondition_error("diag_equiv: dimension mismatch");
    const FiniteField& F = c1.field();
    size_t n = c1.n();
    // a solves H2 diag(a) w = 0 for every generator w of C1, where H2 is a
    // parity check of C2. Rows of the linear system are (generator, parity)
    // pairs.
    Matrix parity = c2.generator().nullspace();
    Matrix sys(&F, c1.k() * parity.rows(), n);
    size_t row = 0;
    for (size_t r = 0; r < c1.k(); ++r) {
        for (size_t p = 0; p < parity.rows(); ++p, ++row) {
            for (size_t i = 0; i < n; ++i) sys.set(row, i, c1.generator().at(r, i) * parity.at(p, i));
        }
    }
    Matrix space = sys.nullspace();
    if (space.rows() == 0) return std::nullopt;
    auto verify = [&](const std::vector<FieldElement>& a) {
        for (const FieldElement& ai : a)
            if (ai.is_zero()) return false;
        Matrix scaled(&F, c1.k(), n);
        for (size_t r = 0; r < c1.k(); ++r)
            for (size_t i = 0; i < n; ++i) scaled.set(r, i, c1.generator().at(r, i) * a[i]);
        return Matrix::vstack(scaled, c2.generator()).rank() == c2.k();
    };
    auto row_of = [&](size_t r) {
        std::vector<FieldElement> a(n);
        for (size_t i = 0; i < n; ++i) a[i] = space.at(r, i);
        return a;
    };
    for (size_t r = 0; r < space.rows(); ++r) {
        std::vector<FieldElement> a = row_of(r);
        if (verify(a)) return a;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> coeff(0, F.order() - 1);
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::vector<FieldElement> a(n, F.zero());
        for (size_t r = 0; r < space.rows(); ++r) {
            FieldElement c = F.element(coeff(rng));
            if (c.is_zero()) continue;
            for (size_t i = 0; i < n; ++i) a[i] = a[i] + c * space.at(r, i);
        }
        if (verify(a)) return a;
    }
    return std::nullopt;
}

int64_t hamming_weight(const std::vector<FieldElement>& v) {
    int64_t w = 0;
    for (const FieldElement& x : v) w += !x.is_zero();
    return w;
}

DistanceResult min_distance(const LinearCode& code, uint64_t budget) {
    size_t k = code.k(), n = code.n();
    if (k == 0) return {static_cast<int64_t>(n) + 1, true};  // empty code convention: no nonzero word
    const FiniteField& F = code.field();
    // q^k message enumeration within budget
    long double total = 1;
    bool enumerable = true;
    for (size_t i = 0; i < k; ++i) {
        total *= static_cast<long double>(F.order());
        if (total > static_cast<long double>(budget)) {
            enumerable = false;
            break;
        }
    }
    if (enumerable) {
        std::vector<uint64_t> msg(k, 0);
        std::vector<FieldElement> word(n, F.zero());
        int64_t best = static_cast<int64_t>(n);
        // odometer over messages; recompute words incrementally per step
        while (true) {
            size_t pos = 0;
            while (pos < k) {
                msg[pos]++;
                // subtract old row multiple is cheaper done by full recompute of row effect:
                if (msg[pos] < F.order()) break;
                msg[pos] = 0;
                ++pos;
            }
            if (pos == k) break;
            std::vector<FieldElement> m(k);
            for (size_t i = 0; i < k; ++i) m[i] = F.element(msg[i]);
            int64_t wt = hamming_weight(code.encode(m));
            if (wt > 0 && wt < best) best = wt;
        }
        return {best, true};
    }
    if (code.provenance() && code.provenance()->design_distance > 0)
        return {code.provenance()->design_distance, false};
    return {1, false};
}

namespace {

// DFS over r-subsets of columns keeping the chosen prefix in echelon form.
// Any dependent prefix extends to a dependent r-subset, so the first
// reduction to zero settles the answer.
class SubsetRankScan {
public:
    SubsetRankScan(const Matrix& mat, size_t r) : field_(mat.field()), r_(r), n_(mat.cols()) {
        cols_.resize(n_, std::vector<FieldElement>(r));
        for (size_t c = 0; c < n_; ++c)
            for (size_t row = 0; row < r; ++row) cols_[c][row] = mat.at(row, c);
    }

    bool all_independent() { return dfs(0, 0); }

private:
    bool dfs(size_t start, size_t depth) {
        if (depth == r_) return true;
        for (size_t c = start; c + (r_ - depth) <= n_; ++c) {
            std::vector<FieldElement> v = cols_[c];
            for (size_t j = 0; j < depth; ++j) {
                FieldElement f = v[pivot_[j]];
                if (f.is_zero()) continue;
                for (size_t row = 0; row < r_; ++row) v[row] = v[row] - f * ech_[j][row];
            }
            size_t p = r_;
            for (size_t row = 0; row < r_; ++row)
                if (!v[row].is_zero()) {
                    p = row;
                    break;
                }
            if (p == r_) return false;  // dependent prefix: a rank-deficient subset exists
            FieldElement inv = v[p].inv();
            for (size_t row = 0; row < r_; ++row) v[row] = v[row] * inv;
            ech_.push_back(std::move(v));
            pivot_.push_back(p);
            bool ok = dfs(c + 1, depth + 1);
            ech_.pop_back();
            pivot_.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    const FiniteField* field_;
    size_t r_, n_;
    std::vector<std::vector<FieldElement>> cols_;
    std::vector<std::vector<FieldElement>> ech_;
    std::vector<size_t> pivot_;
};

bool every_subset_full_rank(const Matrix& mat, size_t r, uint64_t subset_budget) {
    size_t n = mat.cols();
    long double count = 1;
    for (size_t i = 0; i < r; ++i) count = count * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
    if (count > static_cast<long double>(subset_budget)) throw budget_error("mds_check: subset budget exceeded");
    return SubsetRankScan(mat, r).all_independent();
}

}  // namespace

bool mds_check(const LinearCode& code, uint64_t subset_budget) {
    size_t k = code.k(), n = code.n();
    if (k == 0 || k == n) return true;
    // a code is MDS iff its dual is; test whichever side has fewer rows
    if (n - k < k) return every_subset_full_rank(code.dual().generator(), n - k, subset_budget);
    return every_subset_full_rank(code.generator(), k, subset_budget);
}

std::vector<FieldElement> random_codeword(const LinearCode& code, std::mt19937_64& rng) {
    const FiniteField& F = code.field();
    std::uniform_int_distribution<uint64_t> coeff(0, F.order() - 1);
    std::vector<FieldElement> msg(code.k());
    for (auto& m : msg) m = F.element(coeff(rng));
    return code.encode(msg);
}

}  // namespace kummerlcp
