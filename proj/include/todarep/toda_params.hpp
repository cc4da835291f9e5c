#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "todarep/cartan.hpp"

namespace todarep {

/// Exponents (k_0, ..., k_n) of the cyclic 1-form eta(z), with the derived
/// total N = n+1 + sum k_i.
struct KParams {
    int n = 0;
    std::vector<Rational> k;  // length n+1

    Rational N() const;
    // k_i >= -1 for all i.
    bool valid_range() const;
    // k_i = k_{n-i+1} for i = 1..n (indices mod n+1).
    bool symmetric() const;

    bool operator==(const KParams&) const = default;
};

/// Asymptotic data m = diag(m_0, ..., m_n), trace zero.
struct MParams {
    CartanVector m;

    int n() const { return m.n; }
    // m_i + m_{n-i} = 0.
    bool tt_symmetric() const;

    bool operator==(const MParams&) const = default;
};

/// The n Stokes parameters s_1, ..., s_n.
struct StokesParams {
    int n = 0;
    std::vector<std::complex<double>> s;  // length n
};

struct PolytopeStatus {
    bool member = false;     // m_{i-1} - m_i + 1 >= 0 for all i mod n+1
    bool generic = false;    // strict inequalities
    bool symmetric = false;  // m_i + m_{n-i} = 0
};

/// Numerical failure in the Stokes inversion (repeated roots, failed alcove
/// placement, non-convergent root finder).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

KParams make_kparams(int n, std::vector<Rational> k);
MParams make_mparams(std::vector<Rational> entries);

// m = ((n+1)/N)(rho + sum k_i eps_i) - rho. Throws on N <= 0.
MParams m_from_k(const KParams& kp);

// k_i = (N/(n+1))(m_{i-1} - m_i + 1) - 1, index -1 read as n.
// Exact inverse of m_from_k; validity of k_i >= -1 is not enforced here.
KParams k_from_m(const MParams& mp, const Rational& N);

PolytopeStatus polytope_status(const MParams& mp);

// Eigenvalues of the root-of-monodromy matrix:
// lambda_j = exp(2 pi i (m_j + rho_j)/(n+1)).
std::vector<std::complex<double>> monodromy_eigenvalues(const MParams& mp);
std::vector<std::complex<double>> monodromy_eigenvalues(int n, const std::vector<double>& m);

// s_i = i-th elementary symmetric function of the monodromy eigenvalues.
StokesParams stokes_from_m(const MParams& mp);
StokesParams stokes_from_m(int n, const std::vector<double>& m);

// Monic characteristic polynomial coefficients, descending degree:
// x^{n+1} - s_1 x^n + s_2 x^{n-1} - ... + (-1)^{n+1}; the constant term is
// forced by the unit determinant. Size n+2.
std::vector<std::complex<double>> char_poly_from_stokes(const StokesParams& sp);

// Roots of a monic polynomial given by descending coefficients
// (Durand-Kerner). Throws NumericalError on non-convergence.
std::vector<std::complex<double>> polynomial_roots(
    const std::vector<std::complex<double>>& coeffs);

// Inverse of stokes_from_m on the alcove-interior (distinct-root) locus:
// recovers the numeric m with (m + rho)/(n+1) the interior-alcove argument
// placement. Throws NumericalError on repeated roots or failed/ambiguous
// placement.
std::vector<double> m_from_stokes(const StokesParams& sp);

}  // namespace todarep
