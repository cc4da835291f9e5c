#include "todarep/rep_map.hpp"

#include <numeric>

namespace todarep {

namespace {

bool integral_nonneg(const KParams& kp, std::vector<long long>* out = nullptr) {
    for (const auto& ki : kp.k) {
        if (ki < 0 || boost::multiprecision::denominator(ki) != 1) return false;
        if (out) out->push_back(boost::multiprecision::numerator(ki).convert_to<long long>());
    }
    return true;
}

}  // namespace

AffineDominantWeight make_weight(int n, DominantWeight v, long long level) {
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("AffineDominantWeight: expected n coefficients");
    long long total = 0;
    for (long long vi : v) {
        if (vi < 0) throw std::invalid_argument("AffineDominantWeight: coefficients must be >= 0");
        total += vi;
    }
    if (total > level)
        throw std::invalid_argument("AffineDominantWeight: sum v_i exceeds the level");
    return AffineDominantWeight{n, std::move(v), level};
}

AffineDominantWeight weight_from_k(const KParams& kp) {
    std::vector<long long> k;
    if (!integral_nonneg(kp, &k))
        throw std::invalid_argument("weight_from_k: exponents must be nonnegative integers");
    const long long level = std::accumulate(k.begin(), k.end(), 0LL);
    return AffineDominantWeight{kp.n, DominantWeight(k.begin() + 1, k.end()), level};
}

KParams k_from_weight(const AffineDominantWeight& w) {
    const long long total = std::accumulate(w.v.begin(), w.v.end(), 0LL);
    if (total > w.level) throw std::invalid_argument("k_from_weight: sum v_i exceeds the level");
    std::vector<Rational> k;
    k.reserve(w.v.size() + 1);
    k.emplace_back(w.level - total);
    for (long long vi : w.v) k.emplace_back(vi);
    return KParams{w.n, std::move(k)};
}

TheoremCheck verify_main_theorem(const KParams& kp) {
    std::vector<long long> k;
    if (!integral_nonneg(kp, &k))
        throw std::invalid_argument("verify_main_theorem: exponents must be nonnegative integers");
    const int n = kp.n;
    const long long level = std::accumulate(k.begin(), k.end(), 0LL);
    const MParams m = m_from_k(kp);
    const CartanVector point = scale(Rational(1, n + 1), add(m.m, rho(n)));

    TheoremCheck result;
    bool integral = true;
    for (const auto& vi : to_epsilon(scale(Rational(level + n + 1), point)).v)
        if (boost::multiprecision::denominator(vi) != 1) integral = false;
    result.alcove_ok = integral && alcove_classify(point) == AlcovePosition::interior;
    if (result.alcove_ok) {
        CartanVector expected = rho(n);
        for (int i = 1; i <= n; ++i)
            if (k[static_cast<size_t>(i)] != 0)
                expected = add(expected, scale(Rational(k[static_cast<size_t>(i)]), epsilon(n, i)));
        result.theta_ok = theta(point, level) == expected;
    }
    return result;
}

MClassification classify_m(const MParams& mp) {
    const int n = mp.n();
    MClassification out;
    const PolytopeStatus st = polytope_status(mp);
    out.generic = st.generic;
    if (!st.generic) return out;

    // k_i = x * d_i - 1 with x = N/(n+1) and d_i = m_{i-1} - m_i + 1 > 0.
    // Integrality holds exactly for x in the positive multiples of
    // lcm(den d_i)/gcd(num d_i); nonnegativity then pins the minimal one.
    std::vector<Rational> d;
    for (int i = 0; i <= n; ++i) {
        const int prev = (i + n) % (n + 1);
        d.push_back(mp.m.h[static_cast<size_t>(prev)] - mp.m.h[static_cast<size_t>(i)] + 1);
    }
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& di : d) {
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(di));
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(di));
    }
    const Rational x0(den_lcm, num_gcd);
    Integer t_min = 1;
    for (const auto& di : d) {
        // smallest t with t * x0 * d_i >= 1
        const Rational bound = 1 / (x0 * di);
        Integer t = boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
        if (t * boost::multiprecision::denominator(bound) < boost::multiprecision::numerator(bound))
            ++t;
        t_min = std::max(t_min, t);
    }
    if (t_min > den_lcm * (n + 1) * 64) return out;  // bounded search: report absence

    std::vector<Rational> k;
    for (const auto& di : d) k.push_back(Rational(t_min) * x0 * di - 1);
    out.representation = weight_from_k(KParams{n, std::move(k)});
    return out;
}

}  // namespace todarep
