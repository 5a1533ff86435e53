#include "kummerlcp/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace kummerlcp {

namespace {

int64_t gcd_i64(int64_t a, int64_t b) { return std::gcd(a, b); }

// Smallest prime power decomposition q = p^e; throws if q is not one.
std::pair<uint64_t, int> prime_power_split(uint64_t q) {
    if (q < 2) throw precondition_error("q must be a prime power >= 2");
    uint64_t p = q;
    for (uint64_t t = 2; t * t <= q; ++t) {
        if (q % t == 0) {
            p = t;
            break;
        }
    }
    int e = 0;
    uint64_t acc = 1;
    while (acc < q) {
        acc *= p;
        ++e;
    }
    if (acc != q) throw precondition_error("q must be a prime power");
    return {p, e};
}

}  // namespace

int64_t CurveSignature::u() const {
    int64_t n = 0;
    for (int64_t l : lambdas) n += (l == 1);
    return n;
}

int64_t CurveSignature::v() const {
    int64_t n = 0;
    for (int64_t l : lambdas) n += (l > 1 && std::gcd(l, m) == 1);
    return n;
}

int64_t CurveSignature::w() const {
    int64_t n = 0;
    for (int64_t l : lambdas) n += (std::gcd(l, m) > 1);
    return n;
}

int64_t CurveSignature::lambda0() const {
    int64_t s = 0;
    for (int64_t l : lambdas) s += l;
    return s;
}

int64_t CurveSignature::genus() const {
    int64_t gcd_sum = 0;
    for (int64_t l : lambdas)
        if (std::gcd(l, m) > 1) gcd_sum += std::gcd(l, m);
    int64_t twice = (m - 1) * (u() + v() - 1) + m * w() - gcd_sum;
    return twice / 2;
}

KummerCurve::KummerCurve(FieldPtr field, int64_t m, FieldElement a,
                         std::vector<std::pair<FieldElement, int64_t>> branch)
    : field_(std::move(field)), m_(m), a_(a) {
    if (m_ < 2) throw precondition_error("curve_create: m must be >= 2");
    if (std::gcd(static_cast<int64_t>(field_->characteristic()), m_) != 1)
        throw precondition_error("curve_create: gcd(q, m) != 1");
    if (a_.is_zero()) throw precondition_error("curve_create: a = 0");
    for (size_t i = 0; i < branch.size(); ++i) {
        const auto& [x, lambda] = branch[i];
        if (lambda < 1 || lambda >= m_) throw precondition_error("curve_create: exponent outside [1, m)");
        for (size_t j = 0; j < i; ++j)
            if (branch[j].first == x) throw precondition_error("curve_create: duplicate branch x-values");
        BranchPoint bp;
        bp.x = x;
        bp.lambda = lambda;
        bp.r = gcd_i64(lambda, m_);
        bp.e = m_ / bp.r;
        bp.vy = lambda / bp.r;
        branch_.push_back(bp);
        lambda0_ += lambda;
    }
    if (std::gcd(lambda0_, m_) != 1) throw precondition_error("curve_create: gcd(lambda0, m) != 1");
    for (size_t i = 0; i < branch_.size(); ++i) {
        switch (branch_type(static_cast<int>(i))) {
            case BranchType::U: u_idx_.push_back(static_cast<int>(i)); break;
            case BranchType::V: v_idx_.push_back(static_cast<int>(i)); break;
            case BranchType::W: w_idx_.push_back(static_cast<int>(i)); break;
        }
    }
    genus_ = signature().genus();
}

BranchType KummerCurve::branch_type(int i) const {
    const BranchPoint& b = branch_[static_cast<size_t>(i)];
    if (b.lambda == 1) return BranchType::U;
    return b.r == 1 ? BranchType::V : BranchType::W;
}

CurveSignature KummerCurve::signature() const {
    CurveSignature s;
    s.m = m_;
    for (const BranchPoint& b : branch_) s.lambdas.push_back(b.lambda);
    return s;
}

FieldElement KummerCurve::rhs_at(FieldElement x0) const {
    FieldElement acc = a_;
    for (const BranchPoint& b : branch_) acc = acc * (x0 - b.x).pow(b.lambda);
    return acc;
}

int KummerCurve::branch_index_of(FieldElement x0) const {
    for (size_t i = 0; i < branch_.size(); ++i)
        if (branch_[i].x == x0) return static_cast<int>(i);
    return -1;
}

FieldElement KummerCurve::residual_at_branch(int i) const {
    FieldElement acc = a_;
    for (size_t j = 0; j < branch_.size(); ++j) {
        if (static_cast<int>(j) == i) continue;
        acc = acc * (branch_[static_cast<size_t>(i)].x - branch_[j].x).pow(branch_[j].lambda);
    }
    return acc;
}

bool KummerCurve::fiber_rational(int i) const {
    const BranchPoint& b = branch_[static_cast<size_t>(i)];
    if (b.r == 1) return true;
    auto roots = field_->nth_roots(residual_at_branch(i), static_cast<uint64_t>(b.r));
    return static_cast<int64_t>(roots.size()) == b.r;
}

std::vector<Place> KummerCurve::split_places() const {
    std::vector<Place> out;
    uint64_t Q = field_->order();
    if (Q > field_->enumeration_budget()) throw budget_error("rational_places: enumeration budget exceeded");
    for (uint64_t xv = 0; xv < Q; ++xv) {
        FieldElement x0 = field_->element(xv);
        if (branch_index_of(x0) >= 0) continue;
        auto roots = field_->nth_roots(rhs_at(x0), static_cast<uint64_t>(m_));
        if (static_cast<int64_t>(roots.size()) != m_) continue;  // incomplete fibers carry no split places
        for (const FieldElement& y0 : roots) out.push_back(Place::split(x0, y0));
    }
    return out;
}

std::vector<Place> KummerCurve::rational_places() const {
    std::vector<Place> out;
    out.push_back(Place::infinity());
    for (size_t i = 0; i < branch_.size(); ++i) {
        if (!fiber_rational(static_cast<int>(i))) continue;
        for (int64_t f = 0; f < branch_[i].r; ++f) out.push_back(Place::ramified(static_cast<int>(i), static_cast<int>(f)));
    }
    for (Place& p : split_places()) out.push_back(p);
    return out;
}

uint64_t KummerCurve::count_rational_places() const {
    uint64_t n = 1;  // infinity
    for (size_t i = 0; i < branch_.size(); ++i) {
        const BranchPoint& b = branch_[i];
        if (b.r == 1) {
            n += 1;
        } else {
            auto roots = field_->nth_roots(residual_at_branch(static_cast<int>(i)), static_cast<uint64_t>(b.r));
            n += roots.size();
        }
    }
    uint64_t Q = field_->order();
    if (Q > field_->enumeration_budget()) throw budget_error("rational_places: enumeration budget exceeded");
    for (uint64_t xv = 0; xv < Q; ++xv) {
        FieldElement x0 = field_->element(xv);
        if (branch_index_of(x0) >= 0) continue;
        n += field_->nth_roots(rhs_at(x0), static_cast<uint64_t>(m_)).size();
    }
    return n;
}

bool KummerCurve::is_maximal() const {
    if (field_->degree() % 2 != 0) return false;
    uint64_t sq = 1;
    for (int i = 0; i < field_->degree() / 2; ++i) sq *= field_->characteristic();
    uint64_t target = field_->order() + 1 + 2 * static_cast<uint64_t>(genus_) * sq;
    return count_rational_places() == target;
}

int64_t KummerCurve::val_x_minus(const Place& p, FieldElement c) const {
    switch (p.kind) {
        case Place::Kind::Infinity: return -m_;
        case Place::Kind::Ramified: {
            const BranchPoint& b = branch_[static_cast<size_t>(p.branch)];
            return b.x == c ? b.e : 0;
        }
        default: return p.x == c ? 1 : 0;
    }
}

int64_t KummerCurve::val_y(const Place& p) const {
    switch (p.kind) {
        case Place::Kind::Infinity: return -lambda0_;
        case Place::Kind::Ramified: return branch_[static_cast<size_t>(p.branch)].vy;
        default: return 0;
    }
}

std::string KummerCurve::equation_str() const {
    std::ostringstream os;
    os << "y^" << m_ << " = ";
    if (!(a_ == field_->one())) os << a_.str() << " * ";
    for (size_t i = 0; i < branch_.size(); ++i) {
        if (i) os << " * ";
        os << "(x - " << branch_[i].x.str() << ")";
        if (branch_[i].lambda != 1) os << "^" << branch_[i].lambda;
    }
    os << "  over " << field_->describe();
    return os.str();
}

XmPlan plan_xm(uint64_t q, int64_t m, int64_t d) {
    if (m < 2) throw precondition_error("xm: m must be >= 2");
    if (d < 1 || static_cast<int64_t>(q + 1) % d != 0) throw precondition_error("xm: d must divide q+1");
    int64_t qq = static_cast<int64_t>(q);
    if ((qq * qq - qq + 1) % m != 0) throw precondition_error("xm: m must divide q^2-q+1");
    if (std::gcd(m, qq + 1) != 1) throw precondition_error("xm: gcd(m, q+1) != 1");
    XmPlan plan;
    plan.lambda = mod_inverse((qq + 1) % m, m);
    plan.dprime = (d % m) * plan.lambda % m;
    plan.u = d * (qq - 2);
    plan.v = d + 1;
    plan.signature.m = m;
    for (int64_t i = 0; i < plan.u; ++i) plan.signature.lambdas.push_back(1);
    for (int64_t i = 0; i < d; ++i) plan.signature.lambdas.push_back(plan.lambda);
    plan.signature.lambdas.push_back(plan.dprime);
    plan.lambda0 = plan.signature.lambda0();
    plan.genus = plan.signature.genus();
    // maximal over F_{q^6}: N = q^6 + 2g q^3 + 1; evaluation set excludes the
    // u+v branch places and infinity.
    uint64_t q3 = q * q * q;
    plan.n_places = q3 * q3 + 2 * static_cast<uint64_t>(plan.genus) * q3 + 1;
    plan.n_eval = plan.n_places - static_cast<uint64_t>(plan.u + plan.v + 1);
    return plan;
}

XmModel normalize_xm(uint64_t q, int64_t m, int64_t d) {
    XmPlan plan = plan_xm(q, m, d);
    auto [p, e] = prime_power_split(q);
    FieldPtr F = FiniteField::create(p, 6 * e);
    FieldElement one = F->one();
    std::vector<FieldElement> beta = F->nth_roots(one, static_cast<uint64_t>(d));
    std::vector<FieldElement> alpha_all = F->nth_roots(one, static_cast<uint64_t>(d) * (q - 1));
    std::vector<std::pair<FieldElement, int64_t>> branch;
    for (const FieldElement& a : alpha_all) {
        if (std::find(beta.begin(), beta.end(), a) == beta.end()) branch.push_back({a, 1});
    }
    for (const FieldElement& b : beta) branch.push_back({b, plan.lambda});
    branch.push_back({F->zero(), plan.dprime});
    if (m % 2 == 0) throw precondition_error("xm: m must be odd");  // always holds for m | q^2-q+1
    // -1 is an m-th power for odd m, so fold the sign of the model into y.
    KummerCurve curve(F, m, one, std::move(branch));
    if (curve.genus() != plan.genus) throw std::logic_error("xm normalization genus mismatch");
    return {std::move(curve), plan.lambda, plan.dprime};
}

YmPlan plan_ym(uint64_t q, int64_t r, int64_t m, int64_t d) {
    if (m < 2) throw precondition_error("ym: m must be >= 2");
    if (r < 3 || r % 2 == 0) throw precondition_error("ym: r must be odd and >= 3");
    if (d < 1 || static_cast<int64_t>(q - 1) % d != 0) throw precondition_error("ym: d must divide q-1");
    int64_t qr = 1;
    for (int64_t i = 0; i < r; ++i) qr *= static_cast<int64_t>(q);
    if (((qr + 1) / (static_cast<int64_t>(q) + 1)) % m != 0 || (qr + 1) % (static_cast<int64_t>(q) + 1) != 0)
        throw precondition_error("ym: m must divide (q^r+1)/(q+1)");
    YmPlan plan;
    plan.dprime = ((-d) % m + m) % m;
    plan.u = d * (static_cast<int64_t>(q) + 1);
    plan.v = 1;
    plan.signature.m = m;
    for (int64_t i = 0; i < plan.u; ++i) plan.signature.lambdas.push_back(1);
    plan.signature.lambdas.push_back(plan.dprime);
    plan.lambda0 = plan.signature.lambda0();
    plan.genus = plan.signature.genus();
    uint64_t qr_u = static_cast<uint64_t>(qr);
    plan.n_places = qr_u * qr_u + 2 * static_cast<uint64_t>(plan.genus) * qr_u + 1;
    plan.n_eval = plan.n_places - static_cast<uint64_t>(plan.u + plan.v + 1);
    return plan;
}

YmModel normalize_ym(uint64_t q, int64_t r, int64_t m, int64_t d) {
    YmPlan plan = plan_ym(q, r, m, d);
    auto [p, e] = prime_power_split(q);
    FieldPtr F = FiniteField::create(p, 2 * static_cast<int>(r) * e);
    FieldElement one = F->one();
    std::vector<std::pair<FieldElement, int64_t>> branch;
    for (const FieldElement& a : F->nth_roots(one, static_cast<uint64_t>(d) * (q + 1))) branch.push_back({a, 1});
    branch.push_back({F->zero(), plan.dprime});
    if (m % 2 == 0) throw precondition_error("ym: m must be odd");  // m | (q^r+1)/(q+1) is odd
    // -1 is an m-th power for odd m, so fold the sign of the model into y.
    KummerCurve curve(F, m, one, std::move(branch));
    if (curve.genus() != plan.genus) throw std::logic_error("ym normalization genus mismatch");
    return {std::move(curve), plan.dprime};
}

KummerCurve hyperelliptic_curve(uint64_t q, int64_t g) {
    if (g < 1) throw precondition_error("hyperelliptic: g must be >= 1");
    auto [p, e] = prime_power_split(q);
    if (p == 2) throw precondition_error("hyperelliptic: odd characteristic required");
    FieldPtr F = FiniteField::create(p, 2 * e);
    // roots of x^{2g+1} + x = x (x^{2g} + 1): 0 and the primitive solutions of
    // x^{2g} = -1, i.e. the odd powers of a 4g-th root of unity.
    std::vector<std::pair<FieldElement, int64_t>> branch;
    std::vector<FieldElement> roots;
    roots.push_back(F->zero());
    FieldElement minus_one = -F->one();
    for (const FieldElement& a : F->nth_roots(minus_one, static_cast<uint64_t>(2 * g))) roots.push_back(a);
    if (roots.size() != static_cast<size_t>(2 * g + 1))
        throw precondition_error("hyperelliptic: x^{2g+1}+x does not split over GF(q^2)");
    std::sort(roots.begin(), roots.end(), [](const FieldElement& a, const FieldElement& b) { return a.v < b.v; });
    for (const FieldElement& x : roots) branch.push_back({x, 1});
    return KummerCurve(F, 2, F->one(), std::move(branch));
}

KummerCurve elliptic_curve_x3p1(uint64_t p) {
    if (p % 3 != 2 || p == 2) throw precondition_error("elliptic: p must be an odd prime with p = 2 mod 3");
    FieldPtr F = FiniteField::create(p, 2);
    std::vector<FieldElement> roots = F->nth_roots(-F->one(), 3);
    if (roots.size() != 3) throw precondition_error("elliptic: x^3+1 does not split over GF(p^2)");
    std::vector<std::pair<FieldElement, int64_t>> branch;
    for (const FieldElement& x : roots) branch.push_back({x, 1});
    return KummerCurve(F, 2, F->one(), std::move(branch));
}

KummerCurve kawakita_curve(FieldPtr field, int64_t m, int64_t mprime, std::vector<FieldElement> alphas) {
    if (mprime < 1 || mprime >= m || m % mprime != 0)
        throw precondition_error("kawakita: mprime must be a proper divisor of m");
    if (static_cast<int64_t>(field->order() - 1) % m != 0) throw precondition_error("kawakita: m must divide q-1");
    if (static_cast<int64_t>(alphas.size()) != m - mprime)
        throw precondition_error("kawakita: need m - mprime extra branch values");
    FieldElement one = field->one();
    std::vector<std::pair<FieldElement, int64_t>> branch;
    branch.push_back({field->zero(), 1});
    for (const FieldElement& a : alphas) {
        if (a.is_zero() || a == one) throw precondition_error("kawakita: alphas must avoid 0 and 1");
        branch.push_back({a, 1});
    }
    branch.push_back({one, mprime});
    return KummerCurve(std::move(field), m, one, std::move(branch));
}

}  // namespace kummerlcp
