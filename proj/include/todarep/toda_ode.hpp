#pragma once

#include <optional>
#include <string>
#include <vector>

#include "todarep/toda_params.hpp"

namespace todarep {

struct TodaState {
    double r = 0.0;
    std::vector<double> w;       // length n+1
    std::vector<double> wprime;  // length n+1
};

struct StepPolicy {
    enum class Kind { fixed, adaptive };
    Kind kind = Kind::fixed;
    int steps = 1024;      // fixed: RK4 step count
    double tol = 1e-10;    // adaptive: sup-norm target at r_end

    static StepPolicy fixed_steps(int steps) { return {Kind::fixed, steps, 0.0}; }
    static StepPolicy adaptive(double tol) { return {Kind::adaptive, 1024, tol}; }
};

struct TodaTrajectory {
    std::vector<TodaState> samples;  // radii strictly increasing
    std::vector<double> m_used;
    std::string policy;
    bool blew_up = false;
    double last_valid_r = 0.0;
};

// Second derivatives of the radial Toda system:
//   w''_i = -w'_i / r + 2(-e^{2(w_{i+1}-w_i)} + e^{2(w_i-w_{i-1})}),
// indices mod n+1. This is the radial reduction of the (t, tbar) form via
// w_{t tbar} = (1/4)(w_rr + w_r / r) for rotationally invariant w.
std::vector<double> radial_rhs(const TodaState& s);

// Small-radius state from the t -> 0 asymptotics w ~ -m log r:
// w = -m ln(eps) + shift, w' = -m / eps.
TodaState init_asymptotic(const MParams& mp, double epsilon,
                          const std::optional<std::vector<double>>& shift = std::nullopt);

// RK4 integration to r_end. Exponential overflow truncates the trajectory
// and sets the blow-up flag; it is not an error.
TodaTrajectory integrate(const TodaState& s0, double r_end, const StepPolicy& policy,
                         const std::vector<double>& m_used = {});

}  // namespace todarep
