#include "todarep/fusion.hpp"

#include <cmath>
#include <numbers>

namespace todarep {

namespace {

std::complex<double> det_gauss(std::vector<std::vector<std::complex<double>>> a) {
    const size_t dim = a.size();
    std::complex<double> det = 1.0;
    for (size_t col = 0; col < dim; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < dim; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t r = col + 1; r < dim; ++r) {
            const std::complex<double> f = a[r][col] / a[col][col];
            for (size_t c = col; c < dim; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

}  // namespace

CartanVector zeta(const AffineDominantWeight& w) {
    long long total = 0;
    for (long long vi : w.v) total += vi;
    if (total > w.level) throw std::invalid_argument("zeta: sum v_i exceeds the level");
    const CartanVector lambda = cartan_from_dominant(w.n, w.v);
    return scale(Rational(1, w.level + w.n + 1), add(lambda, rho(w.n)));
}

SpecialElement special_element(const AffineDominantWeight& w) {
    const CartanVector z = zeta(w);
    SpecialElement t;
    t.n = w.n;
    t.x.reserve(z.h.size());
    for (const auto& zj : z.h)
        t.x.push_back(std::polar(1.0, 2.0 * std::numbers::pi * to_double(zj)));
    return t;
}

std::complex<double> character_value(const DominantWeight& mu, const SpecialElement& t) {
    const int n = t.n;
    if (static_cast<int>(mu.size()) != n)
        throw std::invalid_argument("character_value: weight length must equal n");
    // Partition shift: lambda_i = v_{i+1} + ... + v_n (0-indexed rows), lambda_n = 0.
    std::vector<long long> lambda(static_cast<size_t>(n) + 1, 0);
    for (int i = n - 1; i >= 0; --i)
        lambda[static_cast<size_t>(i)] =
            lambda[static_cast<size_t>(i) + 1] + mu[static_cast<size_t>(i)];

    const size_t dim = static_cast<size_t>(n) + 1;
    std::vector<std::vector<std::complex<double>>> numer(dim, std::vector<std::complex<double>>(dim));
    std::vector<std::vector<std::complex<double>>> denom(dim, std::vector<std::complex<double>>(dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            const long long shift = n - static_cast<long long>(i);
            numer[i][j] = std::pow(t.x[j], static_cast<double>(lambda[i] + shift));
            denom[i][j] = std::pow(t.x[j], static_cast<double>(shift));
        }
    const std::complex<double> vand = det_gauss(std::move(denom));
    if (std::abs(vand) < 1e-10)
        throw NumericalError("character_value: near-singular Vandermonde (entry collision)");
    return det_gauss(std::move(numer)) / vand;
}

bool in_fusion_ideal(const DominantWeight& mu, int n, long long k) {
    for (const auto& lam : enumerate_P_k(n, k)) {
        const auto t = special_element(make_weight(n, lam, k));
        if (std::abs(character_value(mu, t)) >= 1e-8) return false;
    }
    return true;
}

bool verify_zeta_identity(const KParams& kp) {
    const AffineDominantWeight w = weight_from_k(kp);
    const MParams m = m_from_k(kp);
    return zeta(w) == scale(Rational(1, kp.n + 1), add(m.m, rho(kp.n)));
}

}  // namespace todarep
