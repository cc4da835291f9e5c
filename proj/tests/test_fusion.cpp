#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "todarep/fusion.hpp"

using namespace todarep;
using std::numbers::pi;

namespace {

KParams int_k(int n, std::vector<long long> k) {
    std::vector<Rational> kr(k.begin(), k.end());
    return make_kparams(n, std::move(kr));
}

}  // namespace

TEST_CASE("zeta worked examples") {
    CHECK(zeta(make_weight(1, {0}, 1)) == scale(Rational(1, 3), rho(1)));
    CHECK(zeta(make_weight(1, {1}, 1)) == scale(Rational(2, 3), epsilon(1, 1)));
    CHECK(zeta(make_weight(2, {0, 0}, 0)) == scale(Rational(1, 3), rho(2)));
    CHECK_THROWS_AS(zeta(AffineDominantWeight{1, {2}, 1}), std::invalid_argument);
}

TEST_CASE("zeta lies in the alcove interior, so entries are distinct") {
    for (int n = 1; n <= 3; ++n)
        for (long long k = 0; k <= 4; ++k)
            for (const auto& lam : enumerate_P_k(n, k)) {
                const auto w = make_weight(n, lam, k);
                CHECK(alcove_classify(zeta(w)) == AlcovePosition::interior);
                const auto t = special_element(w);
                double min_dist = 2.0;
                std::complex<double> prod = 1.0;
                for (size_t i = 0; i < t.x.size(); ++i) {
                    CHECK(std::abs(std::abs(t.x[i]) - 1.0) < 1e-12);
                    prod *= t.x[i];
                    for (size_t j = i + 1; j < t.x.size(); ++j)
                        min_dist = std::min(min_dist, std::abs(t.x[i] - t.x[j]));
                }
                CHECK(std::abs(prod - 1.0) < 1e-12);
                CHECK(min_dist > 1e-9);
            }
}

TEST_CASE("special element worked examples") {
    const auto t = special_element(make_weight(1, {0}, 1));
    CHECK(std::abs(t.x[0] - std::polar(1.0, pi / 3)) < 1e-12);
    CHECK(std::abs(t.x[1] - std::polar(1.0, -pi / 3)) < 1e-12);

    const auto t0 = special_element(make_weight(1, {0}, 0));
    CHECK(std::abs(t0.x[0] - std::complex<double>(0, 1)) < 1e-12);
    CHECK(std::abs(t0.x[1] - std::complex<double>(0, -1)) < 1e-12);
}

TEST_CASE("zeta identity against m_from_k") {
    CHECK(verify_zeta_identity(int_k(1, {1, 0})));
    CHECK(verify_zeta_identity(int_k(2, {0, 1, 1})));
    for (int n = 1; n <= 3; ++n)
        for (const auto& tup : enumerate_P_k(n + 1, 4)) {
            std::vector<long long> k(tup.begin(), tup.end());
            CHECK(verify_zeta_identity(int_k(n, k)));
        }
}

TEST_CASE("character values") {
    const auto t = special_element(make_weight(1, {0}, 1));
    // defining representation: chi = x_0 + x_1 = 2cos(pi/3) = 1
    CHECK(std::abs(character_value({1}, t) - 1.0) < 1e-12);
    // trivial character
    CHECK(std::abs(character_value({0}, t) - 1.0) < 1e-12);
    const auto t2 = special_element(make_weight(2, {1, 0}, 3));
    CHECK(std::abs(character_value({0, 0}, t2) - 1.0) < 1e-12);
    // sin(3 theta)/sin(theta) vanishes at theta = pi/3
    CHECK(std::abs(character_value({2}, t)) < 1e-12);
}

TEST_CASE("character is symmetric in the entries") {
    auto t = special_element(make_weight(2, {1, 1}, 4));
    const auto base = character_value({2, 1}, t);
    std::sort(t.x.begin(), t.x.end(),
              [](auto a, auto b) { return std::arg(a) < std::arg(b); });
    do {
        CHECK(std::abs(character_value({2, 1}, t) - base) < 1e-10);
    } while (std::next_permutation(t.x.begin(), t.x.end(), [](auto a, auto b) {
        return std::arg(a) < std::arg(b);
    }));
}

TEST_CASE("n=1 characters match the sine ratio") {
    for (long long k = 0; k <= 4; ++k) {
        const auto t = special_element(make_weight(1, {0}, k));
        const double theta = pi / (k + 2);
        for (long long v = 0; v <= 2 * k + 1; ++v) {
            const double expected = std::sin((v + 1) * theta) / std::sin(theta);
            CHECK(std::abs(character_value({v}, t) - expected) < 1e-9);
        }
    }
}

TEST_CASE("fusion ideal membership") {
    for (long long k = 1; k <= 4; ++k) {
        CHECK(in_fusion_ideal({k + 1}, 1, k));
        CHECK_FALSE(in_fusion_ideal({0}, 1, k));
    }
    CHECK_FALSE(in_fusion_ideal({1}, 1, 1));
    CHECK_FALSE(in_fusion_ideal({0, 0}, 2, 2));
}
