#include <doctest.h>

#include <algorithm>

#include "todarep/cartan.hpp"

using namespace todarep;

TEST_CASE("rho matches the explicit diagonal") {
    CHECK(rho(1).h == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
    CHECK(rho(2).h == std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
}

TEST_CASE("rho is the sum of the basic weights") {
    for (int n = 1; n <= 6; ++n) {
        CartanVector sum = cartan_zero(n);
        for (int i = 1; i <= n; ++i) sum = add(sum, epsilon(n, i));
        CHECK(sum == rho(n));
    }
}

TEST_CASE("epsilon entries and duality alpha_i(eps_j) = delta_ij") {
    CHECK(epsilon(2, 1).h ==
          std::vector<Rational>{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)});
    CHECK(epsilon(1, 1) == rho(1));
    CHECK_THROWS_AS(epsilon(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(epsilon(2, 0), std::invalid_argument);
    for (int n = 1; n <= 6; ++n)
        for (int j = 1; j <= n; ++j) {
            const auto coeffs = to_epsilon(epsilon(n, j)).v;
            for (int i = 1; i <= n; ++i)
                CHECK(coeffs[static_cast<size_t>(i - 1)] == Rational(i == j ? 1 : 0));
        }
}

TEST_CASE("bilinear form values") {
    CHECK(bilinear_form(rho(1), rho(1)) == Rational(1, 2));
    CHECK(bilinear_form(epsilon(2, 1), epsilon(2, 1)) == Rational(2, 3));
    CHECK(bilinear_form(rho(3), cartan_zero(3)) == 0);
    CHECK_THROWS_AS(bilinear_form(rho(2), rho(3)), std::invalid_argument);
    for (int n = 1; n <= 10; ++n)
        CHECK(bilinear_form(rho(n), rho(n)) ==
              Rational(static_cast<long long>(n) * (n + 1) * (n + 2), 12));
}

TEST_CASE("cartan/epsilon round trip is the identity") {
    for (int n = 1; n <= 5; ++n) {
        const CartanVector x = scale(Rational(3, 7), rho(n));
        CHECK(from_epsilon(to_epsilon(x)) == x);
        EpsilonCoeffs e;
        e.n = n;
        for (int i = 0; i < n; ++i) e.v.emplace_back(Rational(2 * i - 3, 5));
        CHECK(to_epsilon(from_epsilon(e)) == e);
    }
}

TEST_CASE("alcove classification") {
    CHECK(alcove_classify(scale(Rational(1, 4), rho(2))) == AlcovePosition::interior);
    CHECK(alcove_classify(cartan_zero(2)) == AlcovePosition::boundary);
    CHECK(alcove_classify(rho(2)) == AlcovePosition::outside);
    // boundary via sum = 1
    CHECK(alcove_classify(scale(Rational(1, 2), rho(1))) == AlcovePosition::interior);
    CHECK(alcove_classify(epsilon(1, 1)) == AlcovePosition::boundary);
}

TEST_CASE("enumerate_P_k counts and order") {
    CHECK(enumerate_P_k(1, 1) == std::vector<DominantWeight>{{0}, {1}});
    const auto p21 = enumerate_P_k(2, 1);
    CHECK(p21 == std::vector<DominantWeight>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(enumerate_P_k(5, 0).size() == 1);
    auto binom = [](long long a, long long b) {
        long long acc = 1;
        for (long long i = 1; i <= b; ++i) acc = acc * (a - b + i) / i;
        return acc;
    };
    for (int n = 1; n <= 4; ++n)
        for (long long k = 0; k <= 5; ++k) {
            const auto pts = enumerate_P_k(n, k);
            CHECK(static_cast<long long>(pts.size()) == binom(n + k, n));
            CHECK(std::is_sorted(pts.begin(), pts.end()));
        }
}

TEST_CASE("theta on worked points") {
    // n=1, k=1: (1/3) eps_1 -> eps_1, (2/3) eps_1 -> 2 eps_1
    const CartanVector e1 = epsilon(1, 1);
    CHECK(theta(scale(Rational(1, 3), e1), 1) == e1);
    CHECK(theta(scale(Rational(2, 3), e1), 1) == scale(Rational(2), e1));
    // n=2, k=0: (1/3) rho -> rho
    CHECK(theta(scale(Rational(1, 3), rho(2)), 0) == rho(2));
    CHECK_THROWS_WITH_AS(theta(rho(2), 1), doctest::Contains("interior"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(theta(scale(Rational(1, 5), rho(1)), 1),
                         doctest::Contains("integer"), std::invalid_argument);
}

TEST_CASE("lemma P_k + rho = P_+ cap (k+n+1) interior alcove") {
    for (int n = 1; n <= 4; ++n)
        for (long long k = 0; k <= 5; ++k) CHECK(verify_lemma_pk(n, k));
}

TEST_CASE("make_cartan rejects nonzero trace") {
    CHECK_THROWS_AS(make_cartan({Rational(1), Rational(1)}), std::invalid_argument);
}
