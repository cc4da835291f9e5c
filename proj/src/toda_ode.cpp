#include "todarep/toda_ode.hpp"

#include <cmath>

namespace todarep {

namespace {

constexpr double kExpArgLimit = 500.0;  // beyond this the flow has blown up

bool rhs_safe(const std::vector<double>& w) {
    const size_t len = w.size();
    for (size_t i = 0; i < len; ++i) {
        const double up = 2.0 * (w[(i + 1) % len] - w[i]);
        const double down = 2.0 * (w[i] - w[(i + len - 1) % len]);
        if (!std::isfinite(w[i]) || up > kExpArgLimit || down > kExpArgLimit) return false;
    }
    return true;
}

std::vector<double> second_derivs(double r, const std::vector<double>& w,
                                  const std::vector<double>& wp) {
    const size_t len = w.size();
    std::vector<double> out(len);
    for (size_t i = 0; i < len; ++i) {
        const double up = std::exp(2.0 * (w[(i + 1) % len] - w[i]));
        const double down = std::exp(2.0 * (w[i] - w[(i + len - 1) % len]));
        out[i] = -wp[i] / r + 2.0 * (-up + down);
    }
    return out;
}

// One RK4 step of the first-order system (w, w'). Returns false on blow-up.
bool rk4_step(TodaState& s, double h) {
    const size_t len = s.w.size();
    if (!rhs_safe(s.w)) return false;
    const auto k1w = s.wprime;
    const auto k1p = second_derivs(s.r, s.w, s.wprime);

    std::vector<double> w2(len), p2(len);
    for (size_t i = 0; i < len; ++i) {
        w2[i] = s.w[i] + 0.5 * h * k1w[i];
        p2[i] = s.wprime[i] + 0.5 * h * k1p[i];
    }
    if (!rhs_safe(w2)) return false;
    const auto k2w = p2;
    const auto k2p = second_derivs(s.r + 0.5 * h, w2, p2);

    std::vector<double> w3(len), p3(len);
    for (size_t i = 0; i < len; ++i) {
        w3[i] = s.w[i] + 0.5 * h * k2w[i];
        p3[i] = s.wprime[i] + 0.5 * h * k2p[i];
    }
    if (!rhs_safe(w3)) return false;
    const auto k3w = p3;
    const auto k3p = second_derivs(s.r + 0.5 * h, w3, p3);

    std::vector<double> w4(len), p4(len);
    for (size_t i = 0; i < len; ++i) {
        w4[i] = s.w[i] + h * k3w[i];
        p4[i] = s.wprime[i] + h * k3p[i];
    }
    if (!rhs_safe(w4)) return false;
    const auto k4w = p4;
    const auto k4p = second_derivs(s.r + h, w4, p4);

    for (size_t i = 0; i < len; ++i) {
        s.w[i] += h / 6.0 * (k1w[i] + 2.0 * k2w[i] + 2.0 * k3w[i] + k4w[i]);
        s.wprime[i] += h / 6.0 * (k1p[i] + 2.0 * k2p[i] + 2.0 * k3p[i] + k4p[i]);
    }
    s.r += h;
    return rhs_safe(s.w);
}

TodaTrajectory run_fixed(const TodaState& s0, double r_end, int steps,
                         const std::vector<double>& m_used) {
    TodaTrajectory traj;
    traj.m_used = m_used;
    traj.policy = "fixed:" + std::to_string(steps);
    TodaState s = s0;
    traj.samples.push_back(s);
    const double h = (r_end - s0.r) / steps;
    for (int i = 0; i < steps; ++i) {
        if (!rk4_step(s, h)) {
            traj.blew_up = true;
            break;
        }
        traj.samples.push_back(s);
    }
    traj.last_valid_r = traj.samples.back().r;
    return traj;
}

double final_state_distance(const TodaTrajectory& a, const TodaTrajectory& b) {
    const auto& sa = a.samples.back();
    const auto& sb = b.samples.back();
    double d = 0.0;
    for (size_t i = 0; i < sa.w.size(); ++i) {
        d = std::max(d, std::abs(sa.w[i] - sb.w[i]));
        d = std::max(d, std::abs(sa.wprime[i] - sb.wprime[i]));
    }
    return d;
}

}  // namespace

std::vector<double> radial_rhs(const TodaState& s) {
    if (s.r <= 0.0) throw std::invalid_argument("radial_rhs: radius must be positive");
    return second_derivs(s.r, s.w, s.wprime);
}

TodaState init_asymptotic(const MParams& mp, double epsilon,
                          const std::optional<std::vector<double>>& shift) {
    if (epsilon <= 0.0) throw std::invalid_argument("init_asymptotic: epsilon must be positive");
    const size_t len = mp.m.h.size();
    if (shift && shift->size() != len)
        throw std::invalid_argument("init_asymptotic: shift length mismatch");
    TodaState s;
    s.r = epsilon;
    s.w.resize(len);
    s.wprime.resize(len);
    const double logeps = std::log(epsilon);
    for (size_t i = 0; i < len; ++i) {
        const double mi = to_double(mp.m.h[i]);
        s.w[i] = -mi * logeps + (shift ? (*shift)[i] : 0.0);
        s.wprime[i] = -mi / epsilon;
    }
    return s;
}

TodaTrajectory integrate(const TodaState& s0, double r_end, const StepPolicy& policy,
                         const std::vector<double>& m_used) {
    if (s0.r >= r_end) throw std::invalid_argument("integrate: need s0.r < r_end");
    if (policy.kind == StepPolicy::Kind::fixed)
        return run_fixed(s0, r_end, policy.steps, m_used);

    // Adaptive: double the step count until successive refinements agree at r_end.
    int steps = policy.steps;
    TodaTrajectory prev = run_fixed(s0, r_end, steps, m_used);
    for (int round = 0; round < 16; ++round) {
        steps *= 2;
        TodaTrajectory next = run_fixed(s0, r_end, steps, m_used);
        if (next.blew_up || prev.blew_up ||
            final_state_distance(prev, next) < policy.tol) {
            next.policy = "adaptive:" + std::to_string(steps) + ":tol=" + std::to_string(policy.tol);
            return next;
        }
        prev = std::move(next);
    }
    prev.policy = "adaptive:unconverged:" + std::to_string(steps);
    return prev;
}

}  // namespace todarep
