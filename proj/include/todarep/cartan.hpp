#pragma once

#include <compare>
#include <vector>

#include "todarep/rational.hpp"

namespace todarep {

/// Trace-zero diagonal element of the Cartan subalgebra of sl(n+1),
/// stored as the length-(n+1) diagonal (h_0, ..., h_n).
struct CartanVector {
    int n = 0;
    std::vector<Rational> h;

    bool operator==(const CartanVector&) const = default;
};

/// Coefficients (v_1, ..., v_n) in the basic-weight basis; v_i = alpha_i(h)
/// with alpha_i(h) = h_{i-1} - h_i.
struct EpsilonCoeffs {
    int n = 0;
    std::vector<Rational> v;

    bool operator==(const EpsilonCoeffs&) const = default;
};

/// Integer dominant weight in the epsilon basis: v_i >= 0, length n.
using DominantWeight = std::vector<long long>;

enum class AlcovePosition { interior, boundary, outside };

// Validating constructor: entries must sum to zero exactly.
CartanVector make_cartan(std::vector<Rational> entries);

CartanVector cartan_zero(int n);
CartanVector add(const CartanVector& a, const CartanVector& b);
CartanVector sub(const CartanVector& a, const CartanVector& b);
CartanVector scale(const Rational& c, const CartanVector& a);

// rho = diag(n/2, n/2-1, ..., -n/2) = epsilon_1 + ... + epsilon_n.
CartanVector rho(int n);

// The i-th basic weight (1 <= i <= n): first i entries 1 - i/(n+1),
// remaining entries -i/(n+1).
CartanVector epsilon(int n, int i);

// Trace form B(x, y) = sum_i x_i y_i.
Rational bilinear_form(const CartanVector& x, const CartanVector& y);

EpsilonCoeffs to_epsilon(const CartanVector& x);
CartanVector from_epsilon(const EpsilonCoeffs& e);
CartanVector cartan_from_dominant(int n, const DominantWeight& v);

// Classification against the fundamental alcove
// A = { sum v_i eps_i : v_i >= 0, sum v_i <= 1 }.
AlcovePosition alcove_classify(const CartanVector& x);

// All integer tuples (v_1,...,v_n) with v_i >= 0 and sum <= k, in
// lexicographic order (v_1 most significant, ascending).
std::vector<DominantWeight> enumerate_P_k(int n, long long k);

// The identification theta(v) = (k+n+1) v of the rational interior alcove
// points with P_k + rho. Throws std::invalid_argument naming the failing
// precondition if v is not interior or (k+n+1)v is not an integer weight.
CartanVector theta(const CartanVector& v, long long k);

// Checks P_k + rho = P_+ intersect (k+n+1) (interior alcove) by enumerating
// both sides as finite sets.
bool verify_lemma_pk(int n, long long k);

}  // namespace todarep
