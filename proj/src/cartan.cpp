#include "todarep/cartan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace todarep {

namespace {

void check_same_rank(const CartanVector& a, const CartanVector& b) {
    if (a.n != b.n) throw std::invalid_argument("CartanVector rank mismatch");
}

}  // namespace

CartanVector make_cartan(std::vector<Rational> entries) {
    if (entries.size() < 2) throw std::invalid_argument("CartanVector needs length >= 2");
    Rational trace = 0;
    for (const auto& e : entries) trace += e;
    if (trace != 0) throw std::invalid_argument("CartanVector entries must sum to zero");
    CartanVector out;
    out.n = static_cast<int>(entries.size()) - 1;
    out.h = std::move(entries);
    return out;
}

CartanVector cartan_zero(int n) {
    CartanVector out;
    out.n = n;
    out.h.assign(static_cast<size_t>(n) + 1, Rational(0));
    return out;
}

CartanVector add(const CartanVector& a, const CartanVector& b) {
    check_same_rank(a, b);
    CartanVector out = a;
    for (size_t i = 0; i < out.h.size(); ++i) out.h[i] += b.h[i];
    return out;
}

CartanVector sub(const CartanVector& a, const CartanVector& b) {
    check_same_rank(a, b);
    CartanVector out = a;
    for (size_t i = 0; i < out.h.size(); ++i) out.h[i] -= b.h[i];
    return out;
}

CartanVector scale(const Rational& c, const CartanVector& a) {
    CartanVector out = a;
    for (auto& e : out.h) e *= c;
    return out;
}

CartanVector rho(int n) {
    if (n < 1) throw std::invalid_argument("rho: n must be >= 1");
    CartanVector out;
    out.n = n;
    out.h.reserve(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) out.h.emplace_back(Rational(n, 2) - j);
    return out;
}

CartanVector epsilon(int n, int i) {
    if (n < 1) throw std::invalid_argument("epsilon: n must be >= 1");
    if (i < 1 || i > n) throw std::invalid_argument("epsilon: index out of range");
    CartanVector out;
    out.n = n;
    const Rational tail(-i, n + 1);
    for (int j = 0; j <= n; ++j) out.h.push_back(j < i ? tail + 1 : tail);
    return out;
}

Rational bilinear_form(const CartanVector& x, const CartanVector& y) {
    check_same_rank(x, y);
    Rational acc = 0;
    for (size_t i = 0; i < x.h.size(); ++i) acc += x.h[i] * y.h[i];
    return acc;
}

EpsilonCoeffs to_epsilon(const CartanVector& x) {
    EpsilonCoeffs e;
    e.n = x.n;
    e.v.reserve(static_cast<size_t>(x.n));
    for (int i = 1; i <= x.n; ++i) e.v.push_back(x.h[i - 1] - x.h[i]);
    return e;
}

CartanVector from_epsilon(const EpsilonCoeffs& e) {
    CartanVector out = cartan_zero(e.n);
    for (int i = 1; i <= e.n; ++i)
        if (e.v[i - 1] != 0) out = add(out, scale(e.v[i - 1], epsilon(e.n, i)));
    return out;
}

CartanVector cartan_from_dominant(int n, const DominantWeight& v) {
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("dominant weight length must equal n");
    EpsilonCoeffs e;
    e.n = n;
    for (long long vi : v) e.v.emplace_back(vi);
    return from_epsilon(e);
}

AlcovePosition alcove_classify(const CartanVector& x) {
    const EpsilonCoeffs e = to_epsilon(x);
    Rational total = 0;
    bool all_pos = true, all_nonneg = true;
    for (const auto& vi : e.v) {
        total += vi;
        if (vi <= 0) all_pos = false;
        if (vi < 0) all_nonneg = false;
    }
    if (all_pos && total < 1) return AlcovePosition::interior;
    if (all_nonneg && total <= 1) return AlcovePosition::boundary;
    return AlcovePosition::outside;
}

std::vector<DominantWeight> enumerate_P_k(int n, long long k) {
    std::vector<DominantWeight> out;
    DominantWeight cur(static_cast<size_t>(n), 0);
    // Recursive lexicographic fill of (v_1,...,v_n) with budget k.
    auto rec = [&](auto&& self, int pos, long long budget) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (long long v = 0; v <= budget; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, budget - v);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, k);
    return out;
}

CartanVector theta(const CartanVector& v, long long k) {
    if (alcove_classify(v) != AlcovePosition::interior)
        throw std::invalid_argument("theta: point is not in the interior of the alcove");
    const Rational factor = k + v.n + 1;
    const CartanVector image = scale(factor, v);
    for (const auto& vi : to_epsilon(image).v)
        if (boost::multiprecision::denominator(vi) != 1)
            throw std::invalid_argument(
                "theta: (k+n+1)v does not have integer epsilon-coefficients");
    return image;
}

bool verify_lemma_pk(int n, long long k) {
    std::set<DominantWeight> lhs;
    for (auto w : enumerate_P_k(n, k)) {
        for (auto& vi : w) vi += 1;  // Lambda + rho in the epsilon basis
        lhs.insert(std::move(w));
    }
    // Right side: strictly dominant integer weights with sum < k+n+1.
    std::set<DominantWeight> rhs;
    DominantWeight cur(static_cast<size_t>(n), 1);
    const long long bound = k + n;  // sum <= k+n  <=>  sum < k+n+1
    auto rec = [&](auto&& self, int pos, long long budget) -> void {
        if (pos == n) {
            rhs.insert(cur);
            return;
        }
        for (long long v = 1; v <= budget - (n - 1 - pos); ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, budget - v);
        }
        cur[static_cast<size_t>(pos)] = 1;
    };
    if (bound >= n) rec(rec, 0, bound);
    return lhs == rhs;
}

}  // namespace todarep
