#include <doctest.h>

#include "todarep/rep_map.hpp"

using namespace todarep;

namespace {

KParams int_k(int n, std::vector<long long> k) {
    std::vector<Rational> kr(k.begin(), k.end());
    return make_kparams(n, std::move(kr));
}

}  // namespace

TEST_CASE("weight_from_k worked examples") {
    // k = (1,0,...,0) gives the basic representation (0, 1)
    for (int n = 1; n <= 4; ++n) {
        std::vector<long long> k(static_cast<size_t>(n) + 1, 0);
        k[0] = 1;
        const auto w = weight_from_k(int_k(n, k));
        CHECK(w.level == 1);
        CHECK(w.v == DominantWeight(static_cast<size_t>(n), 0));
    }
    const auto w = weight_from_k(int_k(2, {0, 1, 1}));
    CHECK(w.v == DominantWeight{1, 1});
    CHECK(w.level == 2);

    const auto trivial = weight_from_k(int_k(3, {0, 0, 0, 0}));
    CHECK(trivial.level == 0);

    CHECK_THROWS_AS(weight_from_k(KParams{1, {Rational(1, 2), Rational(0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(weight_from_k(KParams{1, {Rational(-1), Rational(0)}}),
                    std::invalid_argument);
}

TEST_CASE("k_from_weight worked examples and exhaustive inverse") {
    CHECK(k_from_weight(make_weight(3, {0, 0, 0}, 1)) == int_k(3, {1, 0, 0, 0}));
    CHECK(k_from_weight(make_weight(1, {1}, 1)) == int_k(1, {0, 1}));
    CHECK(k_from_weight(make_weight(2, {0, 0}, 0)) == int_k(2, {0, 0, 0}));
    CHECK_THROWS_AS(make_weight(1, {3}, 1), std::invalid_argument);

    for (int n = 1; n <= 4; ++n)
        for (long long level = 0; level <= 6; ++level)
            for (const auto& v : enumerate_P_k(n, level)) {
                const auto w = make_weight(n, v, level);
                CHECK(weight_from_k(k_from_weight(w)) == w);
            }
    // and the other direction over k-tuples
    for (const auto& tup : enumerate_P_k(4, 5)) {
        const KParams kp = int_k(3, {tup[0], tup[1], tup[2], tup[3]});
        CHECK(k_from_weight(weight_from_k(kp)) == kp);
    }
}

TEST_CASE("main theorem: worked instances") {
    const auto a = verify_main_theorem(int_k(1, {1, 0}));
    CHECK(a.alcove_ok);
    CHECK(a.theta_ok);
    const auto b = verify_main_theorem(int_k(2, {0, 1, 1}));
    CHECK(b.alcove_ok);
    CHECK(b.theta_ok);
    CHECK_THROWS_AS(verify_main_theorem(KParams{1, {Rational(1, 3), Rational(0)}}),
                    std::invalid_argument);
}

TEST_CASE("main theorem: exhaustive sweep n <= 3, sum k_i <= 4") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& tup : enumerate_P_k(n + 1, 4)) {
            std::vector<long long> k(tup.begin(), tup.end());
            const auto chk = verify_main_theorem(int_k(n, k));
            CHECK(chk.alcove_ok);
            CHECK(chk.theta_ok);
        }
}

TEST_CASE("alcove point equals (Lambda + rho)/(k + n + 1)") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& tup : enumerate_P_k(n + 1, 3)) {
            std::vector<long long> k(tup.begin(), tup.end());
            const KParams kp = int_k(n, k);
            const auto w = weight_from_k(kp);
            const auto m = m_from_k(kp);
            const CartanVector point = scale(Rational(1, n + 1), add(m.m, rho(n)));
            const CartanVector expected = scale(
                Rational(1, w.level + n + 1),
                add(cartan_from_dominant(n, w.v), rho(n)));
            CHECK(point == expected);
        }
}

TEST_CASE("classify_m recovers representations") {
    for (int n = 1; n <= 4; ++n) {
        const auto cls = classify_m(MParams{scale(Rational(-1, n + 2), rho(n))});
        REQUIRE(cls.representation.has_value());
        CHECK(cls.representation->level == 1);
        CHECK(cls.representation->v == DominantWeight(static_cast<size_t>(n), 0));
    }
    const auto zero = classify_m(MParams{cartan_zero(2)});
    REQUIRE(zero.representation.has_value());
    CHECK(zero.representation->level == 0);

    const auto up = classify_m(MParams{scale(Rational(1, 5), rho(2))});
    REQUIRE(up.representation.has_value());
    CHECK(up.representation->v == DominantWeight{1, 1});
    CHECK(up.representation->level == 2);

    // non-generic m has no realization
    const auto wall = classify_m(MParams{scale(Rational(-1), rho(2))});
    CHECK_FALSE(wall.generic);
    CHECK_FALSE(wall.representation.has_value());
}
