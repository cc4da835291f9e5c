#include "todarep/toda_params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace todarep {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> unit_phase(double turns) {
    return std::polar(1.0, kTwoPi * turns);
}

}  // namespace

Rational KParams::N() const {
    Rational total = n + 1;
    for (const auto& ki : k) total += ki;
    return total;
}

bool KParams::valid_range() const {
    return std::all_of(k.begin(), k.end(), [](const Rational& ki) { return ki >= -1; });
}

bool KParams::symmetric() const {
    for (int i = 1; i <= n; ++i)
        if (k[static_cast<size_t>(i)] != k[static_cast<size_t>((n - i + 1) % (n + 1))])
            return false;
    return true;
}

bool MParams::tt_symmetric() const {
    const int nn = n();
    for (int i = 0; i <= nn; ++i)
        if (m.h[static_cast<size_t>(i)] + m.h[static_cast<size_t>(nn - i)] != 0) return false;
    return true;
}

KParams make_kparams(int n, std::vector<Rational> k) {
    if (n < 1) throw std::invalid_argument("KParams: n must be >= 1");
    if (static_cast<int>(k.size()) != n + 1)
        throw std::invalid_argument("KParams: expected n+1 exponents");
    return KParams{n, std::move(k)};
}

MParams make_mparams(std::vector<Rational> entries) {
    return MParams{make_cartan(std::move(entries))};
}

MParams m_from_k(const KParams& kp) {
    const Rational N = kp.N();
    if (N <= 0) throw std::invalid_argument("m_from_k: N must be positive");
    CartanVector acc = rho(kp.n);
    for (int i = 1; i <= kp.n; ++i)
        if (kp.k[static_cast<size_t>(i)] != 0)
            acc = add(acc, scale(kp.k[static_cast<size_t>(i)], epsilon(kp.n, i)));
    const Rational factor = Rational(kp.n + 1) / N;
    return MParams{sub(scale(factor, acc), rho(kp.n))};
}

KParams k_from_m(const MParams& mp, const Rational& N) {
    if (N <= 0) throw std::invalid_argument("k_from_m: N must be positive");
    const int n = mp.n();
    const Rational factor = N / Rational(n + 1);
    std::vector<Rational> k;
    k.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const int prev = (i + n) % (n + 1);
        const Rational diff =
            mp.m.h[static_cast<size_t>(prev)] - mp.m.h[static_cast<size_t>(i)] + 1;
        k.push_back(factor * diff - 1);
    }
    return KParams{n, std::move(k)};
}

PolytopeStatus polytope_status(const MParams& mp) {
    const int n = mp.n();
    PolytopeStatus st;
    st.member = true;
    st.generic = true;
    for (int i = 0; i <= n; ++i) {
        const int prev = (i + n) % (n + 1);
        const Rational diff =
            mp.m.h[static_cast<size_t>(prev)] - mp.m.h[static_cast<size_t>(i)] + 1;
        if (diff < 0) st.member = false;
        if (diff <= 0) st.generic = false;
    }
    st.symmetric = mp.tt_symmetric();
    return st;
}

std::vector<std::complex<double>> monodromy_eigenvalues(const MParams& mp) {
    const int n = mp.n();
    const CartanVector exponent = scale(Rational(1, n + 1), add(mp.m, rho(n)));
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<size_t>(n) + 1);
    for (const auto& c : exponent.h) out.push_back(unit_phase(to_double(c)));
    return out;
}

std::vector<std::complex<double>> monodromy_eigenvalues(int n, const std::vector<double>& m) {
    std::vector<std::complex<double>> out;
    out.reserve(m.size());
    for (int j = 0; j <= n; ++j)
        out.push_back(unit_phase((m[static_cast<size_t>(j)] + (n / 2.0 - j)) / (n + 1)));
    return out;
}

namespace {

StokesParams elementary_symmetric(int n, const std::vector<std::complex<double>>& lambda) {
    // Coefficients of prod_j (1 + lambda_j y); e_i is the coefficient of y^i.
    std::vector<std::complex<double>> e(lambda.size() + 1, 0.0);
    e[0] = 1.0;
    size_t used = 0;
    for (const auto& l : lambda) {
        ++used;
        for (size_t i = used; i >= 1; --i) e[i] += l * e[i - 1];
    }
    StokesParams sp;
    sp.n = n;
    sp.s.assign(e.begin() + 1, e.begin() + 1 + n);
    return sp;
}

}  // namespace

StokesParams stokes_from_m(const MParams& mp) {
    return elementary_symmetric(mp.n(), monodromy_eigenvalues(mp));
}

StokesParams stokes_from_m(int n, const std::vector<double>& m) {
    return elementary_symmetric(n, monodromy_eigenvalues(n, m));
}

std::vector<std::complex<double>> char_poly_from_stokes(const StokesParams& sp) {
    std::vector<std::complex<double>> coeffs;
    coeffs.reserve(static_cast<size_t>(sp.n) + 2);
    coeffs.push_back(1.0);
    double sign = -1.0;
    for (int i = 0; i < sp.n; ++i) {
        coeffs.push_back(sign * sp.s[static_cast<size_t>(i)]);
        sign = -sign;
    }
    coeffs.push_back(sign * 1.0);  // (-1)^{n+1}, det M = 1
    return coeffs;
}

std::vector<std::complex<double>> polynomial_roots(
    const std::vector<std::complex<double>>& coeffs) {
    const size_t degree = coeffs.size() - 1;
    if (degree == 0) return {};
    if (std::abs(coeffs[0] - std::complex<double>(1.0)) > 1e-12)
        throw std::invalid_argument("polynomial_roots: polynomial must be monic");

    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = coeffs[0];
        for (size_t i = 1; i < coeffs.size(); ++i) acc = acc * x + coeffs[i];
        return acc;
    };

    // Durand-Kerner from the standard non-symmetric seed.
    std::vector<std::complex<double>> z(degree);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> p = 1.0;
    for (size_t j = 0; j < degree; ++j) {
        p *= seed;
        z[j] = p;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double shift = 0.0;
        for (size_t j = 0; j < degree; ++j) {
            std::complex<double> denom = 1.0;
            for (size_t l = 0; l < degree; ++l)
                if (l != j) denom *= z[j] - z[l];
            const std::complex<double> delta = eval(z[j]) / denom;
            z[j] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-14) return z;
    }
    // Accept if residuals are still at target accuracy.
    for (const auto& root : z)
        if (std::abs(eval(root)) > 1e-10)
            throw NumericalError("polynomial_roots: root iteration did not converge");
    return z;
}

std::vector<double> m_from_stokes(const StokesParams& sp) {
    const int n = sp.n;
    const auto roots = polynomial_roots(char_poly_from_stokes(sp));
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-8)
                throw NumericalError("m_from_stokes: repeated roots (non-diagonalizable case)");

    // Fractional turn of each eigenvalue in [0, 1).
    std::vector<double> frac;
    frac.reserve(roots.size());
    for (const auto& r : roots) {
        double f = std::arg(r) / kTwoPi;
        f -= std::floor(f);
        frac.push_back(f);
    }
    std::vector<double> cuts = frac;
    std::sort(cuts.begin(), cuts.end());

    // The true turns c_j = (m_j + rho_j)/(n+1) form a strictly decreasing
    // sequence of width < 1 summing to 0. They agree with frac mod 1, so some
    // cyclic cut of the circle recovers them up to a common integer shift,
    // and the zero-sum condition fixes that shift.
    std::vector<std::vector<double>> candidates;
    for (double cut : cuts) {
        std::vector<double> lifted = frac;
        double total = 0.0;
        for (auto& f : lifted) {
            if (f < cut - 1e-12) f += 1.0;
            total += f;
        }
        const double t = std::round(total / (n + 1));
        if (std::abs(total - (n + 1) * t) > 1e-6) continue;
        for (auto& f : lifted) f -= t;
        std::sort(lifted.begin(), lifted.end(), std::greater<>());
        if (lifted.front() - lifted.back() >= 1.0 - 1e-12) continue;
        bool strict = true;
        for (size_t j = 0; j + 1 < lifted.size(); ++j)
            if (lifted[j] - lifted[j + 1] < 1e-12) strict = false;
        if (!strict) continue;
        bool duplicate = false;
        for (const auto& prev : candidates) {
            double d = 0.0;
            for (size_t j = 0; j < prev.size(); ++j)
                d = std::max(d, std::abs(prev[j] - lifted[j]));
            if (d < 1e-6) duplicate = true;
        }
        if (!duplicate) candidates.push_back(std::move(lifted));
    }
    if (candidates.empty())
        throw NumericalError("m_from_stokes: no consistent interior-alcove argument placement");
    if (candidates.size() > 1)
        throw NumericalError("m_from_stokes: ambiguous alcove placement");

    std::vector<double> m(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        m[static_cast<size_t>(j)] = (n + 1) * candidates[0][static_cast<size_t>(j)] - (n / 2.0 - j);
    return m;
}

}  // namespace todarep
