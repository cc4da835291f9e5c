#include <doctest.h>

#include <cmath>
#include <random>

#include "todarep/toda_ode.hpp"

using namespace todarep;

TEST_CASE("radial rhs basics") {
    TodaState zero{1.0, {0, 0, 0}, {0, 0, 0}};
    for (double d : radial_rhs(zero)) CHECK(d == 0.0);

    // n=1, w = (a, -a): w''_0 = -w'_0/r + 2(-e^{-4a} + e^{4a})
    const double a = 0.3;
    TodaState s{2.0, {a, -a}, {0.1, -0.1}};
    const auto rhs = radial_rhs(s);
    CHECK(rhs[0] ==
          doctest::Approx(-0.1 / 2.0 + 2.0 * (-std::exp(-4 * a) + std::exp(4 * a)))
              .epsilon(1e-12));

    TodaState bad{0.0, {0, 0}, {0, 0}};
    CHECK_THROWS_AS(radial_rhs(bad), std::invalid_argument);
}

TEST_CASE("rhs telescopes: sum w'' + sum w'/r = 0") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        TodaState s;
        s.r = 0.5 + std::abs(u(rng));
        for (int i = 0; i < 4; ++i) {
            s.w.push_back(u(rng));
            s.wprime.push_back(u(rng));
        }
        double total = 0.0, ptotal = 0.0;
        for (double d : radial_rhs(s)) total += d;
        for (double p : s.wprime) ptotal += p;
        CHECK(std::abs(total + ptotal / s.r) < 1e-12);
    }
}

TEST_CASE("asymptotic initial data") {
    const auto zero = init_asymptotic(MParams{cartan_zero(2)}, 0.01,
                                      std::vector<double>{0.5, 0.0, -0.5});
    CHECK(zero.w == std::vector<double>{0.5, 0.0, -0.5});
    CHECK(zero.wprime == std::vector<double>{0.0, 0.0, 0.0});

    const MParams m{scale(Rational(-1, 3), rho(1))};  // m = (-1/6, 1/6)
    const auto s = init_asymptotic(m, 0.01);
    CHECK(s.w[0] == doctest::Approx(std::log(0.01) / 6.0).epsilon(1e-14));
    CHECK(s.w[1] == doctest::Approx(-std::log(0.01) / 6.0).epsilon(1e-14));
    CHECK(s.wprime[0] == doctest::Approx(1.0 / (6 * 0.01)).epsilon(1e-14));
    CHECK(std::abs(s.w[0] + s.w[1]) < 1e-15);
    CHECK_THROWS_AS(init_asymptotic(m, -1.0), std::invalid_argument);
}

TEST_CASE("zero solution is stationary") {
    TodaState z{0.1, {0, 0, 0}, {0, 0, 0}};
    const auto traj = integrate(z, 10.0, StepPolicy::fixed_steps(2000));
    CHECK_FALSE(traj.blew_up);
    for (const auto& s : traj.samples)
        for (double wi : s.w) CHECK(std::abs(wi) < 1e-12);
}

TEST_CASE("trace and tt*-symmetry are preserved along the flow") {
    const MParams m = make_mparams(
        {Rational(1, 4), Rational(1, 12), Rational(-1, 12), Rational(-1, 4)});
    REQUIRE(m.tt_symmetric());
    // Generic asymptotic data is not a global solution; keep the window short
    // of the finite-radius blow-up.
    const auto s0 = init_asymptotic(m, 0.1);
    const auto traj = integrate(s0, 0.5, StepPolicy::fixed_steps(4000));
    CHECK_FALSE(traj.blew_up);
    double prev_r = 0.0;
    for (const auto& s : traj.samples) {
        CHECK(s.r > prev_r);
        prev_r = s.r;
        double trace = 0.0, ptrace = 0.0;
        for (size_t i = 0; i < s.w.size(); ++i) {
            trace += s.w[i];
            ptrace += s.wprime[i];
            CHECK(std::abs(s.w[i] + s.w[s.w.size() - 1 - i]) < 1e-8);
        }
        CHECK(std::abs(trace) < 1e-8);
        CHECK(std::abs(ptrace) < 1e-8);
    }
}

TEST_CASE("RK4 refinement ratio is fourth order") {
    const TodaState s0{1.0, {0.05, -0.05}, {0.0, 0.0}};
    const auto fine = integrate(s0, 1.5, StepPolicy::fixed_steps(8192));
    REQUIRE_FALSE(fine.blew_up);
    auto err = [&](int steps) {
        const auto t = integrate(s0, 1.5, StepPolicy::fixed_steps(steps));
        double d = 0.0;
        for (size_t i = 0; i < t.samples.back().w.size(); ++i)
            d = std::max(d, std::abs(t.samples.back().w[i] - fine.samples.back().w[i]));
        return d;
    };
    const double ratio = err(16) / err(32);
    CHECK(ratio >= 12.0);
    CHECK(ratio <= 20.0);
}

TEST_CASE("adaptive policy converges to the fixed fine solution") {
    const TodaState s0{1.0, {0.05, -0.05}, {0.0, 0.0}};
    const auto adaptive = integrate(s0, 1.5, StepPolicy::adaptive(1e-10));
    const auto fine = integrate(s0, 1.5, StepPolicy::fixed_steps(1 << 16));
    for (size_t i = 0; i < fine.samples.back().w.size(); ++i)
        CHECK(std::abs(adaptive.samples.back().w[i] - fine.samples.back().w[i]) < 1e-8);
}

TEST_CASE("re-integrating from a trajectory point reproduces it") {
    const MParams m = make_mparams({Rational(1, 5), Rational(0), Rational(-1, 5)});
    const auto s0 = init_asymptotic(m, 0.2);
    const auto traj = integrate(s0, 0.8, StepPolicy::fixed_steps(4000));
    const auto& mid = traj.samples[traj.samples.size() / 2];
    const auto rerun = integrate(mid, 0.8, StepPolicy::fixed_steps(4000));
    const auto& a = traj.samples.back();
    const auto& b = rerun.samples.back();
    for (size_t i = 0; i < a.w.size(); ++i) {
        CHECK(std::abs(a.w[i] - b.w[i]) < 1e-9);
        CHECK(std::abs(a.wprime[i] - b.wprime[i]) < 1e-9);
    }
}

TEST_CASE("blow-up is flagged, not thrown") {
    // huge initial separation drives the exponentials over the limit
    TodaState s{0.5, {300.0, -300.0}, {0.0, 0.0}};
    const auto traj = integrate(s, 5.0, StepPolicy::fixed_steps(100));
    CHECK(traj.blew_up);
    CHECK(traj.last_valid_r < 5.0);
    CHECK(traj.samples.size() >= 1);
}
