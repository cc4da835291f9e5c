#include "todarep/selfcheck.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <random>

#include "todarep/fusion.hpp"
#include "todarep/minimal_models.hpp"
#include "todarep/rep_map.hpp"
#include "todarep/toda_ode.hpp"

namespace todarep {

namespace {

struct Reporter {
    std::ostream& out;
    bool all_ok = true;

    void check(const char* name, bool ok) {
        out << (ok ? "PASS " : "FAIL ") << name << "\n";
        all_ok = all_ok && ok;
    }
};

bool lie_core_invariants() {
    for (int n = 1; n <= 6; ++n) {
        CartanVector sum = cartan_zero(n);
        for (int i = 1; i <= n; ++i) {
            sum = add(sum, epsilon(n, i));
            for (int j = 1; j <= n; ++j) {
                const auto e = to_epsilon(epsilon(n, j));
                if (e.v[static_cast<size_t>(i - 1)] != Rational(i == j ? 1 : 0)) return false;
            }
        }
        if (sum != rho(n)) return false;
    }
    for (int n = 1; n <= 10; ++n)
        if (bilinear_form(rho(n), rho(n)) !=
            Rational(static_cast<long long>(n) * (n + 1) * (n + 2), 12))
            return false;
    for (int n = 1; n <= 4; ++n)
        for (long long k = 0; k <= 5; ++k)
            if (!verify_lemma_pk(n, k)) return false;
    return true;
}

bool k_round_trip(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> rank(1, 6), num(-8, 40), den(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rank(rng);
        std::vector<Rational> k;
        for (int i = 0; i <= n; ++i) k.emplace_back(Rational(num(rng), den(rng)));
        const KParams kp{n, k};
        if (kp.N() <= 0) continue;
        if (k_from_m(m_from_k(kp), kp.N()) != kp) return false;
    }
    return true;
}

bool stokes_round_trip(unsigned seed) {
    std::mt19937 rng(seed + 1);
    std::uniform_int_distribution<int> rank(1, 6), num(0, 12), den(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rank(rng);
        std::vector<Rational> k(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= (n + 1) / 2; ++i) {
            const Rational ki(num(rng), den(rng));
            k[static_cast<size_t>(i)] = ki;
            k[static_cast<size_t>((n - i + 1) % (n + 1))] = ki;
        }
        const MParams m = m_from_k(KParams{n, k});
        const auto recovered = m_from_stokes(stokes_from_m(m));
        for (int j = 0; j <= n; ++j)
            if (std::abs(recovered[static_cast<size_t>(j)] -
                         to_double(m.m.h[static_cast<size_t>(j)])) > 1e-8)
                return false;
    }
    return true;
}

bool theorem_and_zeta_sweep() {
    for (int n = 1; n <= 3; ++n)
        for (const auto& tail : enumerate_P_k(n + 1, 4)) {
            // tail enumerates (k_0,...,k_n) with sum <= 4
            std::vector<Rational> k(tail.begin(), tail.end());
            const KParams kp{n, k};
            const auto chk = verify_main_theorem(kp);
            if (!chk.alcove_ok || !chk.theta_ok) return false;
            if (!verify_zeta_identity(kp)) return false;
        }
    return true;
}

bool minimal_model_sweep() {
    for (int n = 1; n <= 3; ++n)
        for (long long N = n + 2; N <= 12; ++N) {
            if (std::gcd<long long>(n + 1, N) != 1) continue;
            const Rational c = fn_central_charge(n, N);
            if (c != central_charge(MinimalModelSpec{n, n + 1, N})) return false;
            for (const auto& lam : enumerate_P_k(n, N - (n + 1))) {
                const auto h = fn_conformal_dim(n, N, lam);
                if (h.h_general != h.h_norm_m || h.h_general != h.h_explicit ||
                    h.h_general != h.h_shifted)
                    return false;
                std::vector<Rational> k;
                k.emplace_back(N - (n + 1) -
                               std::accumulate(lam.begin(), lam.end(), 0LL));
                for (long long vi : lam) k.emplace_back(vi);
                const MParams m = m_from_k(KParams{n, k});
                if (c - 24 * h.h_general != Rational(n) - 12 * mu(m, Rational(N))) return false;
            }
        }
    return true;
}

bool necklace_sweep() {
    for (int np1 = 2; np1 <= 5; ++np1)
        for (long long N = np1; N <= 14; ++N) {
            if (std::gcd<long long>(np1, N) != 1) continue;
            const auto count = necklace_count(np1 - 1, N);
            if (Rational(count.enumerated) != count.formula) return false;
        }
    return true;
}

bool ode_invariants() {
    const int n = 2;
    const MParams m = make_mparams({Rational(1, 5), Rational(0), Rational(-1, 5)});
    // generic asymptotic data blows up at a finite radius; stay inside it
    const auto s0 = init_asymptotic(m, 0.2);
    const auto traj = integrate(s0, 0.8, StepPolicy::fixed_steps(2000), {});
    if (traj.blew_up) return false;
    for (const auto& s : traj.samples) {
        double trace = 0.0, ptrace = 0.0;
        for (int i = 0; i <= n; ++i) {
            trace += s.w[static_cast<size_t>(i)];
            ptrace += s.wprime[static_cast<size_t>(i)];
            if (std::abs(s.w[static_cast<size_t>(i)] + s.w[static_cast<size_t>(n - i)]) > 1e-8)
                return false;
        }
        if (std::abs(trace) > 1e-8 || std::abs(ptrace) > 1e-8) return false;
    }
    // zero solution stays zero
    TodaState z{0.1, {0, 0, 0}, {0, 0, 0}};
    for (const auto& s : integrate(z, 10.0, StepPolicy::fixed_steps(500), {}).samples)
        for (double wi : s.w)
            if (std::abs(wi) > 1e-12) return false;
    return true;
}

}  // namespace

bool run_selfcheck(std::ostream& out, unsigned seed) {
    Reporter rep{out};
    rep.check("lie_core: weights, rho norm, alcove lemma", lie_core_invariants());
    rep.check("toda_params: exact k<->m round trip", k_round_trip(seed));
    rep.check("toda_params: m->s->m inversion", stokes_round_trip(seed));
    rep.check("rep_map/fusion: theorem sweep and zeta identity", theorem_and_zeta_sweep());
    rep.check("minimal_models: four-way h agreement and mu relation", minimal_model_sweep());
    rep.check("minimal_models: necklace counts", necklace_sweep());
    rep.check("toda_ode: conservation and symmetry", ode_invariants());
    return rep.all_ok;
}

}  // namespace todarep
