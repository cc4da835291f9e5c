#pragma once

#include <string>

#include "todarep/toda_params.hpp"

namespace todarep {

/// W_{n+1} minimal model of type (p, p') with gcd(p, p') = 1.
struct MinimalModelSpec {
    int n = 0;
    long long p = 0;
    long long pprime = 0;
};

/// Primary field labels: Lambda^(+) in P_{p-(n+1)}, Lambda^(-) in P_{p'-(n+1)}.
struct PrimaryField {
    DominantWeight lambda_plus;
    DominantWeight lambda_minus;
};

/// Exponent string (k_0, ..., k_n) of nonnegative integers with
/// sum = N - (n+1); carries the cyclic centre action.
struct KString {
    int n = 0;
    std::vector<long long> k;  // length n+1

    bool operator==(const KString&) const = default;
};

/// Symbol string of the scalar o.d.e.: 'Z' for z^{-1}, 'D' for d/dz;
/// length N with n+1 D's.
struct OperatorString {
    std::string tokens;
};

struct NecklaceCount {
    long long enumerated = 0;
    Rational formula;             // (1/N) binom(N, n+1)
    bool formula_applicable = false;  // gcd(n+1, N) == 1
};

/// The conformal dimension computed through four algebraically equivalent
/// routes; all must agree exactly.
struct ConformalDims {
    Rational h_general;   // c - 24h = n - 12 ((n+1)/N)|Lambda - a rho|^2
    Rational h_norm_m;    // c - 24h = n - 12 (N/(n+1))|m|^2
    Rational h_explicit;  // 24h = -(1/N) n(n+2)(N-(n+1))^2 + 12 (N/(n+1))|m|^2
    Rational h_shifted;   // h = ((n+1)/(2N))(|Lambda - a rho|^2 - |a rho|^2)
};

MinimalModelSpec make_model(int n, long long p, long long pprime);

// c = n - n(n+1)(n+2)(p'-p)^2 / (p p'), exact.
Rational central_charge(const MinimalModelSpec& spec);

// h from c - 24h = n - 12 |a_+(L+ + rho) + a_-(L- + rho)|^2, expanded
// rationally via a_+^2 = p'/p, a_-^2 = p/p', a_+ a_- = -1.
Rational conformal_dim(const MinimalModelSpec& spec, const PrimaryField& f);

// Specialization p = n+1, p' = N: c = n - (1/N) n(n+2)(N-(n+1))^2.
Rational fn_central_charge(int n, long long N);

// The four equivalent h formulas for the (n+1, N) model at Lambda.
ConformalDims fn_conformal_dim(int n, long long N, const DominantWeight& lambda);

// mu = (N/(n+1)) |m|^2; satisfies c - 24h = n - 12 mu.
Rational mu(const MParams& mp, const Rational& N);

// True iff h <= 0 for every Lambda in P_{N-(n+1)}.
bool nonunitarity_scan(int n, long long N);

// Centre action: steps applications of k_i -> k_{i-1} (indices mod n+1).
KString centre_act(const KString& ks, long long steps);

// Lexicographically minimal representatives of the cyclic orbits of
// {k in Z_{>=0}^{n+1} : sum k_i = N-(n+1)}, sorted.
std::vector<KString> enumerate_primaries(int n, long long N);

NecklaceCount necklace_count(int n, long long N);

// Symbol string of z^{-k_i} D z^{-k_{i-1}} D ... D z^{-k_{i-n}} D, read left
// to right. Two KStrings are cyclically equivalent iff their operator
// strings are rotations of each other.
OperatorString operator_string(const KString& ks, int i);

bool rotation_equivalent(const OperatorString& a, const OperatorString& b);

}  // namespace todarep
