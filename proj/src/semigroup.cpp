#include "kummerlcp/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace kummerlcp {

int64_t floor_div_i64(int64_t a, int64_t b) {
    int64_t q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

int64_t ceil_div_i64(int64_t a, int64_t b) { return -floor_div_i64(-a, b); }

int64_t f_value(const CurveSignature& sig, int64_t lambda_j, int64_t t) {
    int64_t m = sig.m;
    int64_t lam = mod_inverse(lambda_j % m, m);
    int64_t acc = 0;
    for (int64_t mu : sig.lambdas) acc += ceil_div_i64(t * lam * mu, m);
    acc -= ceil_div_i64(t * lam * sig.lambda0(), m);
    return acc - 1;
}

SemigroupProfile profile(const CurveSignature& sig) {
    SemigroupProfile prof;
    prof.sig = sig;
    prof.genus = sig.genus();
    prof.lambda0 = sig.lambda0();
    int64_t m = sig.m;
    prof.floor_l0_m = floor_div_i64(prof.lambda0, m);
    prof.S.resize(static_cast<size_t>(m - 1));
    for (int64_t t = 1; t <= m - 1; ++t) {
        int64_t acc = 0;
        for (int64_t mu : sig.lambdas) acc += ceil_div_i64(t * mu, m);
        prof.S[static_cast<size_t>(t - 1)] = acc - floor_div_i64(t * prof.lambda0, m);
    }
    prof.s.resize(static_cast<size_t>(m - 1));
    for (int64_t t = 1; t <= m - 2; ++t)
        prof.s[static_cast<size_t>(t - 1)] = prof.ell(t) - prof.ell(t + 1);
    prof.s[static_cast<size_t>(m - 2)] = prof.ell(m - 1) - 1;
    prof.s_prefix.resize(static_cast<size_t>(m - 1));
    int64_t acc = 0;
    for (int64_t t = 1; t <= m - 1; ++t) {
        prof.s_prefix[static_cast<size_t>(t - 1)] = acc;
        acc += prof.s_t(t);
    }
    for (int64_t t = 1; t <= m - 2; ++t) {
        if (prof.s_t(t) < 0) {
            prof.negative_s_t = t;
            break;
        }
    }
    // identities from the construction's degree computation
    if (prof.s_t(m - 1) != prof.floor_l0_m) throw std::logic_error("profile: s_{m-1} != floor(lambda0/m)");
    int64_t weighted = 0;
    for (int64_t t = 1; t <= m - 1; ++t) weighted += t * prof.s_t(t);
    if (weighted != prof.genus) throw std::logic_error("profile: sum t*s_t != genus");
    std::set<int64_t> vf;
    for (int64_t lam : sig.lambdas) {
        if (lam > 1 && std::gcd(lam, m) == 1 && !vf.count(lam)) {
            bool all_ok = true;
            for (int64_t t = 1; t <= m - 1 && all_ok; ++t)
                if (f_value(sig, lam, t) < 0) all_ok = false;
            if (all_ok) vf.insert(lam);
        }
    }
    prof.V_F.assign(vf.begin(), vf.end());
    return prof;
}

std::vector<int64_t> gamma_single_gaps(const SemigroupProfile& prof, const KummerCurve& c, const Place& p) {
    if (p.kind != Place::Kind::Ramified) throw precondition_error("gamma_single: place must be ramified");
    BranchType bt = c.branch_type(p.branch);
    if (bt == BranchType::W) throw precondition_error("gamma_single: gamma fiber places unsupported");
    int64_t m = c.m();
    std::vector<int64_t> gaps;
    for (int64_t t = 1; t <= m - 1; ++t) {
        int64_t bound = bt == BranchType::U
                            ? prof.ell(t) - 2
                            : f_value(prof.sig, c.branch()[static_cast<size_t>(p.branch)].lambda, t);
        for (int64_t mu = 0; mu <= bound; ++mu) gaps.push_back(m * mu + t);
    }
    std::sort(gaps.begin(), gaps.end());
    return gaps;
}

namespace {

void compositions(int64_t total, size_t parts, std::vector<int64_t>& cur,
                  const std::function<void(const std::vector<int64_t>&)>& emit) {
    if (cur.size() + 1 == parts) {
        cur.push_back(total);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int64_t v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int64_t>> gamma_tuple(const SemigroupProfile& prof, const KummerCurve& c,
                                              const std::vector<Place>& places) {
    size_t l = places.size();
    if (l < 2) throw precondition_error("gamma_tuple: need at least two places");
    std::vector<int64_t> lambda_of(l);
    for (size_t i = 0; i < l; ++i) {
        if (places[i].kind != Place::Kind::Ramified) throw precondition_error("gamma_tuple: places must be ramified");
        BranchType bt = c.branch_type(places[i].branch);
        if (bt == BranchType::W) throw precondition_error("gamma_tuple: gamma fiber places unsupported");
        lambda_of[i] = c.branch()[static_cast<size_t>(places[i].branch)].lambda;
    }
    int64_t m = c.m();
    std::vector<std::vector<int64_t>> out;
    for (int64_t t = 1; t <= m - 1; ++t) {
        int64_t budget = prof.ell(t) - static_cast<int64_t>(l);
        if (budget < 0) continue;
        std::vector<int64_t> cur;
        compositions(budget, l, cur, [&](const std::vector<int64_t>& mu) {
            std::vector<int64_t> vec(l);
            for (size_t i = 0; i < l; ++i) {
                int64_t ti = lambda_of[i] == 1 ? t : (t * lambda_of[i]) % m;
                vec[i] = m * mu[i] + ti;
            }
            out.push_back(std::move(vec));
        });
    }
    return out;
}

bool nonspecial_criterion(const KummerCurve& c, const std::vector<Place>& places,
                          const std::vector<int64_t>& alpha) {
    if (places.size() != alpha.size()) throw precondition_error("nonspecial_criterion: size mismatch");
    int64_t deg = std::accumulate(alpha.begin(), alpha.end(), int64_t{0});
    if (deg != c.genus()) throw precondition_error("nonspecial_criterion: degree != g");
    size_t l = places.size();
    if (l == 0) return true;
    SemigroupProfile prof = profile(c);
    // singles: any nonzero pole number <= alpha_i defeats the criterion
    for (size_t i = 0; i < l; ++i) {
        std::vector<int64_t> gaps = gamma_single_gaps(prof, c, places[i]);
        std::set<int64_t> gap_set(gaps.begin(), gaps.end());
        for (int64_t n = 1; n <= alpha[i]; ++n) {
            if (!gap_set.count(n)) return false;
        }
    }
    // proper tuples: Gamma^+ elements embedded by iota_I
    for (uint32_t mask = 1; mask < (1u << l); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<Place> sub;
        std::vector<int64_t> bound;
        for (size_t i = 0; i < l; ++i) {
            if (mask & (1u << i)) {
                sub.push_back(places[i]);
                bound.push_back(alpha[i]);
            }
        }
        for (const auto& vec : gamma_tuple(prof, c, sub)) {
            bool le = true;
            for (size_t i = 0; i < vec.size(); ++i)
                if (vec[i] > bound[i]) {
                    le = false;
                    break;
                }
            if (le) return false;
        }
    }
    return true;
}

Divisor build_nonspecial_g(const KummerCurve& c, PSlotPolicy policy) {
    SemigroupProfile prof = profile(c);
    int64_t m = c.m();
    CurveSignature sig = prof.sig;
    int64_t v = sig.v(), w = sig.w();
    if (prof.negative_s_t) {
        std::ostringstream os;
        os << "infeasible: s_t < 0 at t=" << *prof.negative_s_t;
        throw precondition_error(os.str());
    }
    for (int64_t lam : prof.sig.lambdas) {
        if (lam > 1 && std::gcd(lam, m) == 1 &&
            std::find(prof.V_F.begin(), prof.V_F.end(), lam) == prof.V_F.end())
            throw precondition_error("infeasible: lambda_j not in V_F");
    }
    if (w > prof.floor_l0_m) throw precondition_error("infeasible: w > floor(lambda0/m)");
    int64_t p_from_v = 0;  // how many (m-1)-slots take v-type places
    switch (policy.kind) {
        case PSlotPolicy::Kind::UFirst:
        case PSlotPolicy::Kind::VFirst:
            if (v > prof.floor_l0_m)
                throw precondition_error("infeasible: v > floor(lambda0/m) (Remark-variant required)");
            break;
        case PSlotPolicy::Kind::RemarkK:
            if (v != prof.floor_l0_m + 1)
                throw precondition_error("remark variant requires v = floor(lambda0/m) + 1");
            if (policy.k < w || policy.k > prof.floor_l0_m)
                throw precondition_error("remark variant requires w <= k <= floor(lambda0/m)");
            p_from_v = policy.k;
            break;
    }
    std::vector<Place> u_places, v_places;
    for (int i : c.u_indices()) u_places.push_back(Place::ramified(i, 0));
    for (int i : c.v_indices()) v_places.push_back(Place::ramified(i, 0));
    size_t next_u = 0, next_v = 0;
    Divisor A(&c);
    for (int64_t t = 1; t <= m - 2; ++t) {
        for (int64_t l = 0; l < prof.s_t(t); ++l) {
            if (next_u >= u_places.size())
                throw precondition_error("infeasible: not enough fully ramified alpha places");
            A.add_place(u_places[next_u++], t);
        }
    }
    int64_t p_slots = prof.s_t(m - 1);
    switch (policy.kind) {
        case PSlotPolicy::Kind::UFirst:
            for (int64_t l = 0; l < p_slots; ++l) {
                if (next_u < u_places.size())
                    A.add_place(u_places[next_u++], m - 1);
                else if (next_v < v_places.size())
                    A.add_place(v_places[next_v++], m - 1);
                else
                    throw precondition_error("infeasible: not enough places for (m-1)-slots");
            }
            break;
        case PSlotPolicy::Kind::VFirst:
            for (int64_t l = 0; l < p_slots; ++l) {
                if (next_v < v_places.size())
                    A.add_place(v_places[next_v++], m - 1);
                else if (next_u < u_places.size())
                    A.add_place(u_places[next_u++], m - 1);
                else
                    throw precondition_error("infeasible: not enough places for (m-1)-slots");
            }
            break;
        case PSlotPolicy::Kind::RemarkK:
            if (p_slots - p_from_v < 0 || static_cast<size_t>(p_from_v) > v_places.size())
                throw precondition_error("remark variant: slot counts out of range");
            for (int64_t l = 0; l < p_slots - p_from_v; ++l) {
                if (next_u >= u_places.size())
                    throw precondition_error("infeasible: not enough fully ramified alpha places");
                A.add_place(u_places[next_u++], m - 1);
            }
            for (int64_t l = 0; l < p_from_v; ++l) A.add_place(v_places[next_v++], m - 1);
            break;
    }
    if (A.degree() != c.genus()) throw std::logic_error("build_nonspecial_g: degree != g");
    return A;
}

Divisor build_nonspecial_g_minus_1(const KummerCurve& c, std::optional<Place> sub, PSlotPolicy policy) {
    Divisor A = build_nonspecial_g(c, policy);
    Place p = sub.value_or(Place::infinity());
    if (A.in_support(p)) throw precondition_error("build_nonspecial_g_minus_1: place lies in supp(A)");
    A.add_place(p, -1);
    return A;
}

bool floor_ceil_identity_holds(int64_t a, int64_t b) {
    if (b <= 0) throw precondition_error("denominator must be positive");
    bool i1 = floor_div_i64(-a, b) == -ceil_div_i64(a, b);
    int64_t diff = ceil_div_i64(a, b) - floor_div_i64(a, b);
    bool i2 = diff == (a % b == 0 ? 0 : 1);
    return i1 && i2;
}

bool floor_sum_identity_holds(int64_t a, int64_t b) {
    if (a <= 0 || b <= 0) throw precondition_error("arguments must be positive");
    int64_t lhs = 0;
    for (int64_t k = 1; k <= b - 1; ++k) lhs += floor_div_i64(k * a, b);
    int64_t rhs = ((a - 1) * (b - 1) + std::gcd(a, b) - 1) / 2;
    return lhs == rhs;
}

CeilIncrement ceil_increment(int64_t lambda, int64_t m, int64_t k) {
    if (lambda < 1 || lambda >= m || k < 1 || k > m - 2) throw precondition_error("ceil_increment: out of range");
    int64_t delta = ceil_div_i64((k + 1) * lambda, m) - ceil_div_i64(k * lambda, m);
    bool jump = false;
    for (int64_t l = 1; l <= lambda - 1; ++l) {
        if (k == floor_div_i64(l * m, lambda)) {
            jump = true;
            break;
        }
    }
    return {delta, jump};
}

}  // namespace kummerlcp
