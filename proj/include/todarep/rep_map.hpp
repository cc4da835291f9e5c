#pragma once

#include <optional>

#include "todarep/toda_params.hpp"

namespace todarep {

/// Dominant weight (Lambda, k) of the affine algebra: epsilon-coefficients
/// v_1..v_n plus a level, with sum v_i <= k.
struct AffineDominantWeight {
    int n = 0;
    DominantWeight v;       // length n, nonnegative
    long long level = 0;

    bool operator==(const AffineDominantWeight&) const = default;
};

struct TheoremCheck {
    bool alcove_ok = false;  // (m + rho)/(n+1) lies in the rational interior alcove at level k
    bool theta_ok = false;   // theta of that point equals (sum_{i>=1} k_i eps_i) + rho
};

struct MClassification {
    bool generic = false;
    bool rational = true;  // m is exact rational by construction
    std::optional<AffineDominantWeight> representation;
};

AffineDominantWeight make_weight(int n, DominantWeight v, long long level);

// (Lambda, k) = (sum_{i>=1} k_i eps_i, sum_i k_i); requires integer k_i >= 0.
AffineDominantWeight weight_from_k(const KParams& kp);

// k_i = v_i (i >= 1), k_0 = level - sum v_i; requires sum v_i <= level.
KParams k_from_weight(const AffineDominantWeight& w);

// Exact verification of the two parts of the Stokes-to-representation
// correspondence for integer exponents.
TheoremCheck verify_main_theorem(const KParams& kp);

// Searches for the minimal N > 0 realizing m through nonnegative integer
// exponents; absent when m is non-generic or the bounded search fails.
MClassification classify_m(const MParams& mp);

}  // namespace todarep
