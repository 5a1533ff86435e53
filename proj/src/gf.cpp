#include "kummerlcp/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kummerlcp {

namespace {

using u128 = unsigned __int128;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((u128)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Dense polynomial over F_p, ascending coefficients. Used only for modulus
// selection and non-tabled field arithmetic.
using Poly = std::vector<uint64_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u128> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += (u128)a[i] * b[j];
    }
    Poly c(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<uint64_t>(acc[i] % p);
    // reduce mod monic f of degree deg
    size_t deg = f.size() - 1;
    for (size_t i = c.size(); i-- > deg;) {
        uint64_t t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (size_t j = 0; j < deg; ++j) {
            uint64_t sub = mulmod_u64(t, f[j], p);
            c[i - deg + j] = (c[i - deg + j] + p - sub) % p;
        }
    }
    c.resize(deg);
    poly_trim(c);
    return c;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
    Poly r = {1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // a mod b with b made monic
        uint64_t lead_inv = powmod_u64(b.back(), p - 2, p);
        Poly bm(b.size());
        for (size_t i = 0; i < b.size(); ++i) bm[i] = mulmod_u64(b[i], lead_inv, p);
        while (a.size() >= bm.size() && !a.empty()) {
            uint64_t c = a.back();
            if (c != 0) {
                size_t shift = a.size() - bm.size();
                for (size_t i = 0; i < bm.size(); ++i)
                    a[shift + i] = (a[shift + i] + p - mulmod_u64(c, bm[i], p)) % p;
            }
            poly_trim(a);
            if (a.empty()) break;
            if (a.size() < bm.size()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin irreducibility: f of degree k is irreducible over F_p iff
// x^(p^k) = x mod f and gcd(x^(p^(k/l)) - x, f) = 1 for every prime l | k.
bool poly_irreducible(const Poly& f, uint64_t p) {
    int k = static_cast<int>(f.size()) - 1;
    if (k <= 0) return false;
    if (k == 1) return true;
    Poly x = {0, 1};
    for (uint64_t l : distinct_prime_factors(static_cast<uint64_t>(k))) {
        int e = k / static_cast<int>(l);
        Poly xp = x;
        for (int i = 0; i < e; ++i) xp = poly_powmod(xp, p, f, p);
        // xp - x
        Poly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    Poly xp = x;
    for (int i = 0; i < k; ++i) xp = poly_powmod(xp, p, f, p);
    poly_trim(xp);
    return xp == x;
}

constexpr uint64_t kTableOrderLimit = 1ull << 20;

uint64_t rho_step(uint64_t x, uint64_t c, uint64_t n) { return (mulmod_u64(x, x, n) + c) % n; }

uint64_t pollard_rho(uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = rho_step(x, c, n);
            y = rho_step(rho_step(y, c, n), c, n);
            uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

}  // namespace

uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    // deterministic Miller-Rabin bases for 64-bit integers
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<uint64_t> distinct_prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    auto push = [&out](uint64_t q) {
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    };
    std::vector<uint64_t> stack = {n};
    while (!stack.empty()) {
        uint64_t m = stack.back();
        stack.pop_back();
        if (m < 2) continue;
        if (is_prime_u64(m)) {
            push(m);
            continue;
        }
        bool split = false;
        for (uint64_t q = 2; q * q <= m && q < 100000; ++q) {
            if (m % q == 0) {
                push(q);
                while (m % q == 0) m /= q;
                stack.push_back(m);
                split = true;
                break;
            }
        }
        if (!split) {
            uint64_t d = pollard_rho(m);
            stack.push_back(d);
            stack.push_back(m / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int64_t mod_inverse(int64_t a, int64_t m) {
    int64_t t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
    while (newr != 0) {
        int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw precondition_error("mod_inverse: arguments not coprime");
    return ((t % m) + m) % m;
}

FieldPtr FiniteField::create(uint64_t p, int k) {
    if (!is_prime_u64(p)) throw precondition_error("field_create: p is not prime");
    if (k < 1) throw precondition_error("field_create: k must be >= 1");
    // overflow guard for p^k <= 2^63
    uint64_t order = 1;
    for (int i = 0; i < k; ++i) {
        if (order > (1ull << 63) / p) throw precondition_error("field_create: order exceeds 2^63");
        order *= p;
    }
    std::vector<int64_t> modulus;
    if (k == 1) {
        modulus = {0, 1};  // the formal polynomial x
    } else {
        // lexicographically smallest monic irreducible, low-degree-first.
        bool found = false;
        for (uint64_t w = 0; w < order && !found; ++w) {
            // w's most significant base-p digit is c_0, so increasing w scans
            // candidates in low-degree-first lexicographic order.
            Poly f(static_cast<size_t>(k) + 1, 0);
            uint64_t t = w;
            std::vector<uint64_t> digits(k);
            for (int i = 0; i < k; ++i) {
                digits[static_cast<size_t>(i)] = t % p;
                t /= p;
            }
            for (int i = 0; i < k; ++i) f[static_cast<size_t>(i)] = digits[static_cast<size_t>(k - 1 - i)];
            f[static_cast<size_t>(k)] = 1;
            if (f[0] == 0) continue;  // divisible by x
            if (poly_irreducible(f, p)) {
                modulus.assign(f.begin(), f.end());
                found = true;
            }
        }
        if (!found) throw std::logic_error("field_create: no irreducible polynomial found");
    }
    return FieldPtr(new FiniteField(p, k, std::move(modulus)));
}

FieldPtr FiniteField::create_with_modulus(uint64_t p, int k, std::vector<int64_t> modulus) {
    if (!is_prime_u64(p)) throw precondition_error("field_create: p is not prime");
    if (k < 1) throw precondition_error("field_create: k must be >= 1");
    if (modulus.size() != static_cast<size_t>(k) + 1 || modulus.back() != 1)
        throw precondition_error("field_create: modulus must be monic of degree k");
    Poly f(modulus.size());
    for (size_t i = 0; i < modulus.size(); ++i) {
        int64_t c = ((modulus[i] % static_cast<int64_t>(p)) + static_cast<int64_t>(p)) % static_cast<int64_t>(p);
        f[i] = static_cast<uint64_t>(c);
        modulus[i] = c;
    }
    if (k > 1 && !poly_irreducible(f, p)) throw precondition_error("field_create: modulus is reducible");
    return FieldPtr(new FiniteField(p, k, std::move(modulus)));
}

FiniteField::FiniteField(uint64_t p, int k, std::vector<int64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    order_ = 1;
    for (int i = 0; i < k; ++i) order_ *= p;
    if (order_ > 2 && order_ - 1 <= kTableOrderLimit) build_tables();
}

FieldElement FiniteField::element(uint64_t packed) const {
    if (packed >= order_) throw precondition_error("element: packed value out of range");
    return {this, packed};
}

FieldElement FiniteField::scalar(int64_t n) const {
    int64_t r = n % static_cast<int64_t>(p_);
    if (r < 0) r += static_cast<int64_t>(p_);
    return {this, static_cast<uint64_t>(r)};
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
    if (a.field != this || b.field != this) throw precondition_error("mixed-field operands");
    if (p_ == 2) return {this, a.v ^ b.v};
    if (k_ == 1) return {this, (a.v + b.v) % p_};
    uint64_t out = 0, mult = 1, av = a.v, bv = b.v;
    for (int i = 0; i < k_; ++i) {
        out += ((av % p_ + bv % p_) % p_) * mult;
        av /= p_;
        bv /= p_;
        mult *= p_;
    }
    return {this, out};
}

FieldElement FiniteField::neg(FieldElement a) const {
    if (a.field != this) throw precondition_error("mixed-field operands");
    if (p_ == 2) return a;
    if (k_ == 1) return {this, (p_ - a.v) % p_};
    uint64_t out = 0, mult = 1, av = a.v;
    for (int i = 0; i < k_; ++i) {
        out += ((p_ - av % p_) % p_) * mult;
        av /= p_;
        mult *= p_;
    }
    return {this, out};
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

uint64_t FiniteField::mul_nolut(uint64_t a, uint64_t b) const {
    if (k_ == 1) return mulmod_u64(a, b, p_);
    Poly pa, pb;
    for (uint64_t t = a; t; t /= p_) pa.push_back(t % p_);
    for (uint64_t t = b; t; t /= p_) pb.push_back(t % p_);
    Poly f(modulus_.size());
    for (size_t i = 0; i < modulus_.size(); ++i) f[i] = static_cast<uint64_t>(modulus_[i]);
    Poly c = poly_mulmod(pa, pb, f, p_);
    uint64_t out = 0;
    for (size_t i = c.size(); i-- > 0;) out = out * p_ + c[i];
    return out;
}

uint64_t FiniteField::pow_nolut(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul_nolut(r, a);
        a = mul_nolut(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t FiniteField::find_generator_value() const {
    std::vector<uint64_t> factors = distinct_prime_factors(order_ - 1);
    for (uint64_t g = 1; g < order_; ++g) {
        bool ok = true;
        for (uint64_t q : factors) {
            if (pow_nolut(g, (order_ - 1) / q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no multiplicative generator found");
}

void FiniteField::build_tables() {
    group_factors_ = distinct_prime_factors(order_ - 1);
    generator_value_ = find_generator_value();
    exp_.resize(order_ - 1);
    log_.assign(order_, 0);
    uint64_t cur = 1;
    for (uint64_t i = 0; i + 1 < order_; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_nolut(cur, generator_value_);
    }
    has_tables_ = true;
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
    if (a.field != this || b.field != this) throw precondition_error("mixed-field operands");
    if (a.v == 0 || b.v == 0) return zero();
    if (has_tables_) {
        uint64_t e = log_[a.v] + log_[b.v];
        uint64_t n = order_ - 1;
        if (e >= n) e -= n;
        return {this, exp_[e]};
    }
    return {this, mul_nolut(a.v, b.v)};
}

FieldElement FiniteField::inv(FieldElement a) const {
    if (a.field != this) throw precondition_error("mixed-field operands");
    if (a.v == 0) throw precondition_error("inverse of zero");
    if (has_tables_) {
        uint64_t n = order_ - 1;
        uint64_t e = (n - log_[a.v]) % n;
        return {this, exp_[e]};
    }
    return {this, pow_nolut(a.v, order_ - 2)};
}

FieldElement FiniteField::pow(FieldElement a, int64_t e) const {
    if (a.field != this) throw precondition_error("mixed-field operands");
    if (e == 0) return one();
    if (a.v == 0) {
        if (e < 0) throw precondition_error("inverse of zero");
        return zero();
    }
    uint64_t n = order_ - 1;
    uint64_t em = static_cast<uint64_t>(((e % static_cast<int64_t>(n)) + static_cast<int64_t>(n))) % n;
    if (has_tables_) {
        uint64_t idx = mulmod_u64(log_[a.v], em, n);
        return {this, exp_[idx]};
    }
    return {this, pow_nolut(a.v, em)};
}

FieldElement FiniteField::multiplicative_generator() const {
    if (has_tables_) return {this, generator_value_};
    return {this, find_generator_value()};
}

uint64_t FiniteField::root_count_bound(uint64_t n) const {
    uint64_t nm = n % (order_ - 1);
    if (nm == 0) return order_ - 1;
    return std::gcd(nm, order_ - 1);
}

std::vector<FieldElement> FiniteField::nth_roots(FieldElement c, uint64_t n) const {
    if (c.field != this) throw precondition_error("mixed-field operands");
    if (n == 0) throw precondition_error("nth_roots: n must be positive");
    if (c.v == 0) return {zero()};
    uint64_t gn = order_ - 1;
    uint64_t nm = n % gn;
    if (nm == 0) {
        if (c.v != 1) return {};
        if (gn > enum_budget_) throw budget_error("nth_roots: enumeration budget exceeded");
        std::vector<FieldElement> all;
        for (uint64_t v = 1; v < order_; ++v) all.push_back({this, v});
        return all;
    }
    uint64_t r = std::gcd(nm, gn);
    if (pow({this, c.v}, static_cast<int64_t>(gn / r)).v != 1) return {};
    std::vector<FieldElement> roots;
    if (has_tables_) {
        uint64_t L = log_[c.v];
        uint64_t step = gn / r;
        uint64_t j0 = mulmod_u64(L / r, static_cast<uint64_t>(mod_inverse(
                                             static_cast<int64_t>(nm / r), static_cast<int64_t>(step))),
                                 step);
        for (uint64_t i = 0; i < r; ++i) roots.push_back({this, exp_[(j0 + i * step) % gn]});
    } else if (c.v == 1) {
        // roots of unity need no discrete log
        uint64_t g = find_generator_value();
        uint64_t step = gn / r;
        for (uint64_t i = 0; i < r; ++i) roots.push_back({this, pow_nolut(g, i * step)});
    } else {
        if (order_ > enum_budget_) throw budget_error("nth_roots: enumeration budget exceeded");
        for (uint64_t v = 1; v < order_; ++v) {
            if (pow_nolut(v, nm) == c.v) roots.push_back({this, v});
        }
    }
    std::sort(roots.begin(), roots.end(), [](const FieldElement& a, const FieldElement& b) { return a.v < b.v; });
    return roots;
}

std::vector<FieldElement> FiniteField::elements() const {
    if (order_ > enum_budget_) throw budget_error("element_enumerate: budget exceeded");
    std::vector<FieldElement> out;
    out.reserve(order_);
    for (uint64_t v = 0; v < order_; ++v) out.push_back({this, v});
    return out;
}

std::string FiniteField::serialize(FieldElement a) const {
    if (a.field != this) throw precondition_error("mixed-field operands");
    std::ostringstream os;
    uint64_t t = a.v;
    for (int i = 0; i < k_; ++i) {
        if (i > 0 && p_ > 10) os << '.';
        os << t % p_;
        t /= p_;
    }
    return os.str();
}

FieldElement FiniteField::parse(const std::string& s) const {
    std::vector<uint64_t> digits;
    if (p_ > 10) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, '.')) {
            if (tok.empty()) throw precondition_error("parse: malformed element string");
            digits.push_back(std::stoull(tok));
        }
    } else {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw precondition_error("parse: malformed element string");
            digits.push_back(static_cast<uint64_t>(ch - '0'));
        }
    }
    if (digits.size() != static_cast<size_t>(k_)) throw precondition_error("parse: wrong digit count");
    uint64_t v = 0;
    for (size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= p_) throw precondition_error("parse: digit out of range");
        v = v * p_ + digits[i];
    }
    return {this, v};
}

std::string FiniteField::describe() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (k_ > 1) os << "^" << k_;
    os << ")";
    return os.str();
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return field->add(*this, o); }
FieldElement FieldElement::operator-(const FieldElement& o) const { return field->sub(*this, o); }
FieldElement FieldElement::operator*(const FieldElement& o) const { return field->mul(*this, o); }
FieldElement FieldElement::operator/(const FieldElement& o) const { return field->mul(*this, field->inv(o)); }
FieldElement FieldElement::operator-() const { return field->neg(*this); }
FieldElement FieldElement::inv() const { return field->inv(*this); }
FieldElement FieldElement::pow(int64_t e) const { return field->pow(*this, e); }

std::vector<uint64_t> FieldElement::coords() const {
    std::vector<uint64_t> out(static_cast<size_t>(field->degree()));
    uint64_t t = v;
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = t % field->characteristic();
        t /= field->characteristic();
    }
    return out;
}

std::string FieldElement::str() const { return field->serialize(*this); }

}  // namespace kummerlcp
