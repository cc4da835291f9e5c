#include "todarep/minimal_models.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace todarep {

namespace {

Rational norm2(const CartanVector& x) { return bilinear_form(x, x); }

long long weight_sum(const DominantWeight& v) {
    return std::accumulate(v.begin(), v.end(), 0LL);
}

void check_level(const DominantWeight& v, long long level, const char* what) {
    for (long long vi : v)
        if (vi < 0) throw std::invalid_argument(std::string(what) + ": negative coefficient");
    if (weight_sum(v) > level)
        throw std::invalid_argument(std::string(what) + ": level bound violated");
}

Integer binomial(long long top, long long bottom) {
    if (bottom < 0 || bottom > top) return 0;
    Integer acc = 1;
    for (long long i = 1; i <= bottom; ++i) {
        acc *= top - bottom + i;
        acc /= i;
    }
    return acc;
}

}  // namespace

MinimalModelSpec make_model(int n, long long p, long long pprime) {
    if (n < 1 || p < 1 || pprime < 1)
        throw std::invalid_argument("MinimalModelSpec: n, p, p' must be positive");
    if (std::gcd(p, pprime) != 1)
        throw std::invalid_argument("MinimalModelSpec: p and p' must be coprime");
    return MinimalModelSpec{n, p, pprime};
}

Rational central_charge(const MinimalModelSpec& spec) {
    if (std::gcd(spec.p, spec.pprime) != 1)
        throw std::invalid_argument("central_charge: p and p' must be coprime");
    const long long n = spec.n;
    const long long diff = spec.pprime - spec.p;
    return Rational(n) -
           Rational(n * (n + 1) * (n + 2)) * Rational(diff * diff, spec.p * spec.pprime);
}

Rational conformal_dim(const MinimalModelSpec& spec, const PrimaryField& f) {
    const int n = spec.n;
    check_level(f.lambda_plus, spec.p - (n + 1), "conformal_dim Lambda^(+)");
    check_level(f.lambda_minus, spec.pprime - (n + 1), "conformal_dim Lambda^(-)");
    const CartanVector ap = add(cartan_from_dominant(n, f.lambda_plus), rho(n));
    const CartanVector am = add(cartan_from_dominant(n, f.lambda_minus), rho(n));
    // |a_+ ap + a_- am|^2 with a_+^2 = p'/p, a_-^2 = p/p', a_+ a_- = -1.
    const Rational Q = Rational(spec.pprime, spec.p) * norm2(ap) +
                       Rational(spec.p, spec.pprime) * norm2(am) -
                       2 * bilinear_form(ap, am);
    const Rational c = central_charge(spec);
    return (c - n + 12 * Q) / 24;
}

Rational fn_central_charge(int n, long long N) {
    if (N <= n + 1) throw std::invalid_argument("fn_central_charge: requires N > n+1");
    if (std::gcd<long long>(n + 1, N) != 1)
        throw std::invalid_argument("fn_central_charge: n+1 and N must be coprime");
    const long long excess = N - (n + 1);
    return Rational(n) - Rational(1, N) * Rational(static_cast<long long>(n) * (n + 2)) *
                             Rational(excess * excess);
}

ConformalDims fn_conformal_dim(int n, long long N, const DominantWeight& lambda) {
    const long long level = N - (n + 1);
    check_level(lambda, level, "fn_conformal_dim");
    const Rational c = fn_central_charge(n, N);
    const Rational a(level, n + 1);
    const CartanVector shifted = sub(cartan_from_dominant(n, lambda), scale(a, rho(n)));
    const Rational shifted2 = norm2(shifted);

    // k-string of Lambda: k_i = v_i (i >= 1), k_0 = level - sum v_i.
    std::vector<Rational> k;
    k.emplace_back(level - weight_sum(lambda));
    for (long long vi : lambda) k.emplace_back(vi);
    const Rational m2 = norm2(m_from_k(KParams{n, std::move(k)}).m);

    ConformalDims out;
    out.h_general = (c - n + 12 * Rational(n + 1, 1) / N * shifted2) / 24;
    out.h_norm_m = (c - n + 12 * Rational(N, n + 1) * m2) / 24;
    out.h_explicit = (-Rational(static_cast<long long>(n) * (n + 2) * level * level, N) +
                      12 * Rational(N, n + 1) * m2) /
                     24;
    out.h_shifted = Rational(n + 1, 2 * N) * (shifted2 - a * a * norm2(rho(n)));
    return out;
}

Rational mu(const MParams& mp, const Rational& N) {
    return N / Rational(mp.n() + 1) * norm2(mp.m);
}

bool nonunitarity_scan(int n, long long N) {
    for (const auto& lam : enumerate_P_k(n, N - (n + 1)))
        if (fn_conformal_dim(n, N, lam).h_general > 0) return false;
    return true;
}

KString centre_act(const KString& ks, long long steps) {
    const int len = ks.n + 1;
    const long long s = ((steps % len) + len) % len;
    KString out;
    out.n = ks.n;
    out.k.resize(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i)
        out.k[static_cast<size_t>(i)] = ks.k[static_cast<size_t>((i - s + len * 2) % len)];
    return out;
}

std::vector<KString> enumerate_primaries(int n, long long N) {
    const long long total = N - (n + 1);
    std::vector<KString> out;
    if (total < 0) return out;
    const int len = n + 1;
    std::set<std::vector<long long>> reps;
    std::vector<long long> cur(static_cast<size_t>(len), 0);
    auto canonical = [len](const std::vector<long long>& k) {
        std::vector<long long> best = k;
        std::vector<long long> rot = k;
        for (int s = 1; s < len; ++s) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            best = std::min(best, rot);
        }
        return best;
    };
    auto rec = [&](auto&& self, int pos, long long budget) -> void {
        if (pos == len - 1) {
            cur[static_cast<size_t>(pos)] = budget;
            reps.insert(canonical(cur));
            return;
        }
        for (long long v = 0; v <= budget; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, budget - v);
        }
    };
    rec(rec, 0, total);
    out.reserve(reps.size());
    for (const auto& r : reps) out.push_back(KString{n, r});
    return out;
}

NecklaceCount necklace_count(int n, long long N) {
    NecklaceCount out;
    out.enumerated = static_cast<long long>(enumerate_primaries(n, N).size());
    out.formula = Rational(binomial(N, n + 1), Integer(N));
    out.formula_applicable = std::gcd<long long>(n + 1, N) == 1;
    return out;
}

OperatorString operator_string(const KString& ks, int i) {
    const int len = ks.n + 1;
    OperatorString out;
    for (int j = 0; j <= ks.n; ++j) {
        const long long reps = ks.k[static_cast<size_t>(((i - j) % len + len) % len)];
        out.tokens.append(static_cast<size_t>(reps), 'Z');
        out.tokens.push_back('D');
    }
    return out;
}

bool rotation_equivalent(const OperatorString& a, const OperatorString& b) {
    if (a.tokens.size() != b.tokens.size()) return false;
    return (a.tokens + a.tokens).find(b.tokens) != std::string::npos;
}

}  // namespace todarep
