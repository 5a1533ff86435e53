#include "kummerlcp/divisor.hpp"

#include <algorithm>
#include <sstream>

namespace kummerlcp {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
    // b > 0
    int64_t q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

}  // namespace

int64_t Divisor::coeff(const Place& p) const {
    auto it = coeffs_.find(p.key());
    return it == coeffs_.end() ? 0 : it->second.second;
}

void Divisor::add_place(const Place& p, int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(p.key(), std::make_pair(p, c));
    if (!inserted) {
        it->second.second += c;
        if (it->second.second == 0) coeffs_.erase(it);
    }
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor out = *this;
    if (!out.curve_) out.curve_ = o.curve_;
    for (const auto& [k, pc] : o.coeffs_) out.add_place(pc.first, pc.second);
    return out;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + o * -1; }

Divisor Divisor::operator*(int64_t c) const {
    Divisor out(curve_);
    if (c == 0) return out;
    for (const auto& [k, pc] : coeffs_) out.add_place(pc.first, pc.second * c);
    return out;
}

bool Divisor::operator==(const Divisor& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (const auto& [k, pc] : coeffs_) {
        if (o.coeff(pc.first) != pc.second) return false;
    }
    return true;
}

int64_t Divisor::degree() const {
    int64_t d = 0;
    for (const auto& [k, pc] : coeffs_) d += pc.second;
    return d;
}

bool Divisor::is_effective() const {
    for (const auto& [k, pc] : coeffs_)
        if (pc.second < 0) return false;
    return true;
}

std::vector<std::pair<Place, int64_t>> Divisor::entries() const {
    std::vector<std::pair<Place, int64_t>> out;
    for (const auto& [k, pc] : coeffs_) out.push_back(pc);
    return out;
}

size_t Divisor::support_size() const { return coeffs_.size(); }

bool Divisor::in_support(const Place& p) const { return coeffs_.count(p.key()) > 0; }

Divisor Divisor::gcd(const Divisor& a, const Divisor& b) {
    Divisor out(a.curve_ ? a.curve_ : b.curve_);
    for (const auto& [k, pc] : a.coeffs_) out.add_place(pc.first, std::min(pc.second, b.coeff(pc.first)));
    for (const auto& [k, pc] : b.coeffs_) {
        if (!a.in_support(pc.first)) out.add_place(pc.first, std::min<int64_t>(0, pc.second));
    }
    return out;
}

Divisor Divisor::lmd(const Divisor& a, const Divisor& b) {
    Divisor out(a.curve_ ? a.curve_ : b.curve_);
    for (const auto& [k, pc] : a.coeffs_) out.add_place(pc.first, std::max(pc.second, b.coeff(pc.first)));
    for (const auto& [k, pc] : b.coeffs_) {
        if (!a.in_support(pc.first)) out.add_place(pc.first, std::max<int64_t>(0, pc.second));
    }
    return out;
}

FieldElement MonomialFunction::eval(const KummerCurve& c, const Place& p) const {
    if (p.kind != Place::Kind::Split) throw precondition_error("monomial eval: place must be split");
    const FiniteField& F = c.field();
    FieldElement acc = F.pow(p.y, t);
    for (const auto& [cx, e] : exps) {
        FieldElement base = p.x - F.element(cx);
        if (base.is_zero()) {
            if (e > 0) return F.zero();
            throw precondition_error("monomial eval: pole at evaluation place");
        }
        acc = acc * base.pow(e);
    }
    return acc;
}

std::string MonomialFunction::str(const KummerCurve& c) const {
    std::ostringstream os;
    bool first = true;
    if (t != 0) {
        os << "y";
        if (t != 1) os << "^" << t;
        first = false;
    }
    for (const auto& [cx, e] : exps) {
        if (!first) os << " * ";
        os << "(x - " << c.field().element(cx).str() << ")";
        if (e != 1) os << "^" << e;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

int64_t valuation(const KummerCurve& c, const Place& p, const MonomialFunction& fn) {
    int64_t v = fn.t * c.val_y(p);
    for (const auto& [cx, e] : fn.exps) v += e * c.val_x_minus(p, c.field().element(cx));
    return v;
}

Divisor principal_divisor(const KummerCurve& c, const MonomialFunction& fn) {
    Divisor div(&c);
    const FiniteField& F = c.field();
    int64_t deg_x = 0;  // total x-degree of the numerator
    for (const auto& [cx, e] : fn.exps) deg_x += e;
    int64_t v_inf = -c.m() * deg_x - fn.t * c.lambda0();
    if (v_inf != 0) div.add_place(Place::infinity(), v_inf);
    // branch fibers pick up contributions from both y^t and matching factors
    for (size_t i = 0; i < c.branch().size(); ++i) {
        const BranchPoint& b = c.branch()[i];
        auto it = fn.exps.find(b.x.v);
        int64_t e = it == fn.exps.end() ? 0 : it->second;
        int64_t v = b.e * e + fn.t * b.vy;
        if (v == 0) continue;
        for (int64_t f = 0; f < b.r; ++f) div.add_place(Place::ramified(static_cast<int>(i), static_cast<int>(f)), v);
    }
    // non-branch factors need completely split fibers
    for (const auto& [cx, e] : fn.exps) {
        FieldElement x0 = F.element(cx);
        if (c.branch_index_of(x0) >= 0 || e == 0) continue;
        auto roots = F.nth_roots(c.rhs_at(x0), static_cast<uint64_t>(c.m()));
        if (static_cast<int64_t>(roots.size()) != c.m())
            throw precondition_error("principal_divisor: factor at a non-split x-value");
        for (const FieldElement& y0 : roots) div.add_place(Place::split(x0, y0), e);
    }
    if (div.degree() != 0) throw std::logic_error("principal divisor has nonzero degree");
    return div;
}

namespace {

struct FiberCoeff {
    int64_t coeff = 0;
};

// Common coefficient of G on each branch fiber; throws on split support or
// unequal coefficients within a fiber.
std::vector<int64_t> fiber_coeffs(const KummerCurve& c, const Divisor& G, int64_t* inf_coeff) {
    std::vector<int64_t> out(c.branch().size(), 0);
    std::vector<bool> seen(c.branch().size(), false);
    *inf_coeff = 0;
    for (const auto& [p, coeff] : G.entries()) {
        switch (p.kind) {
            case Place::Kind::Infinity: *inf_coeff = coeff; break;
            case Place::Kind::Split: throw precondition_error("riemann_roch: split places in support unsupported");
            case Place::Kind::Ramified: {
                size_t i = static_cast<size_t>(p.branch);
                if (seen[i] && out[i] != coeff)
                    throw precondition_error("riemann_roch: unequal coefficients across a gamma fiber");
                out[i] = coeff;
                seen[i] = true;
                break;
            }
        }
    }
    // every place of a touched fiber must carry the coefficient
    for (size_t i = 0; i < c.branch().size(); ++i) {
        if (!seen[i]) continue;
        for (int64_t f = 0; f < c.branch()[i].r; ++f) {
            if (G.coeff(Place::ramified(static_cast<int>(i), static_cast<int>(f))) != out[i])
                throw precondition_error("riemann_roch: unequal coefficients across a gamma fiber");
        }
    }
    return out;
}

}  // namespace

RRSpace riemann_roch(const KummerCurve& c, const Divisor& G) {
    int64_t g_inf = 0;
    std::vector<int64_t> g_branch = fiber_coeffs(c, G, &g_inf);
    RRSpace out;
    // numerator basis uses powers of (x - c0) for a fixed non-branch c0
    uint64_t c0 = 0;
    while (c.branch_index_of(c.field().element(c0)) >= 0) ++c0;
    for (int64_t t = 0; t < c.m(); ++t) {
        // v >= -G at each fiber forces (x-xi) exponents up; infinity caps the
        // total x-degree of z(x) y^t.
        int64_t lo_sum = 0;
        std::vector<int64_t> lo(c.branch().size());
        for (size_t i = 0; i < c.branch().size(); ++i) {
            const BranchPoint& b = c.branch()[i];
            lo[i] = ceil_div(-g_branch[i] - t * b.vy, b.e);
            lo_sum += lo[i];
        }
        int64_t max_deg = floor_div(g_inf - t * c.lambda0(), c.m());
        int64_t slack = max_deg - lo_sum;
        for (int64_t j = 0; j <= slack; ++j) {
            MonomialFunction fn;
            fn.t = t;
            for (size_t i = 0; i < c.branch().size(); ++i)
                if (lo[i] != 0) fn.exps[c.branch()[i].x.v] = lo[i];
            if (j != 0) fn.exps[c0] += j;
            out.basis.push_back(std::move(fn));
        }
    }
    out.dim = static_cast<int64_t>(out.basis.size());
    return out;
}

int64_t rr_dim(const KummerCurve& c, const Divisor& G) { return riemann_roch(c, G).dim; }

bool is_nonspecial(const KummerCurve& c, const Divisor& A) {
    int64_t deg = A.degree();
    if (deg < 0) return true;
    return rr_dim(c, A) == deg + 1 - c.genus();
}

std::optional<MonomialFunction> linear_equiv_witness(const KummerCurve& c, const Divisor& G, const Divisor& H) {
    if (G.degree() != H.degree()) throw precondition_error("linear_equiv_witness: degree mismatch");
    Divisor delta = G - H;  // want delta = (z)
    for (int64_t t = 0; t < c.m(); ++t) {
        MonomialFunction fn;
        fn.t = t;
        bool ok = true;
        // branch exponents are forced by the fiber valuations
        for (size_t i = 0; i < c.branch().size() && ok; ++i) {
            const BranchPoint& b = c.branch()[i];
            int64_t want = delta.coeff(Place::ramified(static_cast<int>(i), 0));
            for (int64_t f = 1; f < b.r && ok; ++f)
                if (delta.coeff(Place::ramified(static_cast<int>(i), static_cast<int>(f))) != want) ok = false;
            if (!ok) break;
            int64_t num = want - t * b.vy;
            if (num % b.e != 0) {
                ok = false;
                break;
            }
            if (num != 0) fn.exps[b.x.v] = num / b.e;
        }
        if (!ok) continue;
        // split-place coefficients must be constant on complete fibers
        std::map<uint64_t, std::vector<std::pair<Place, int64_t>>> by_x;
        for (const auto& [p, coeff] : delta.entries()) {
            if (p.kind == Place::Kind::Split) by_x[p.x.v].push_back({p, coeff});
        }
        for (const auto& [xv, entries] : by_x) {
            FieldElement x0 = c.field().element(xv);
            auto roots = c.field().nth_roots(c.rhs_at(x0), static_cast<uint64_t>(c.m()));
            if (static_cast<int64_t>(roots.size()) != c.m()) {
                ok = false;
                break;
            }
            int64_t want = entries.front().second;
            if (static_cast<int64_t>(entries.size()) != c.m()) {
                ok = false;
                break;
            }
            for (const auto& [p, coeff] : entries)
                if (coeff != want) ok = false;
            if (!ok) break;
            fn.exps[xv] = want;
        }
        if (!ok) continue;
        // works iff the infinity coefficient closes the degree
        if (delta == principal_divisor(c, fn)) return fn;
    }
    return std::nullopt;
}

}  // namespace kummerlcp
