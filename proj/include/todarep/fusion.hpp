#pragma once

#include <complex>

#include "todarep/rep_map.hpp"

namespace todarep {

/// Special element t_Lambda = exp(2 pi i zeta_Lambda) as a unit-determinant
/// diagonal; entries are pairwise distinct for Lambda in P_k.
struct SpecialElement {
    int n = 0;
    std::vector<std::complex<double>> x;  // length n+1
};

// zeta_Lambda = (Lambda + rho)/(k + n + 1); interior alcove point, exact.
CartanVector zeta(const AffineDominantWeight& w);

SpecialElement special_element(const AffineDominantWeight& w);

// Weyl character of the dominant weight mu evaluated at t, by the bialternant
// ratio det(x_j^{lambda_i + n - i}) / det(x_j^{n - i}) with lambda the
// partition of mu. Throws NumericalError when the Vandermonde denominator is
// near singular.
std::complex<double> character_value(const DominantWeight& mu, const SpecialElement& t);

// True iff the character of mu vanishes (< 1e-8) at every t_Lambda, Lambda in P_k.
bool in_fusion_ideal(const DominantWeight& mu, int n, long long k);

// Exact check of zeta_{Lambda} = (m + rho)/(n+1) for Lambda, m both derived
// from the integer exponents kp.
bool verify_zeta_identity(const KParams& kp);

}  // namespace todarep
