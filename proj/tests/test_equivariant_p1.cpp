#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "chow/equivariant_p1.hpp"
#include "chow/errors.hpp"
#include "test_support.hpp"

using namespace chow;

namespace {
const Polynomial T = Polynomial::variable("t");
}  // namespace

TEST_SUITE("equivariant classes") {
    TEST_CASE("built-in classes and their relations") {
        CHECK(equivariant_K() == EquivariantP1Class(T, -T));
        CHECK(equivariant_Q() == EquivariantP1Class(-T, Polynomial()));
        CHECK(equivariant_R() == EquivariantP1Class(Polynomial(), T));
        CHECK(equivariant_one() == EquivariantP1Class(Polynomial(1), Polynomial(1)));
        // -K - R = Q, so -K = Q + R
        CHECK(-equivariant_K() - equivariant_R() == equivariant_Q());
        CHECK(equivariant_Q() + equivariant_R() == -equivariant_K());
        // ... and -K - R - Q is the zero class
        CHECK(-equivariant_K() - equivariant_R() - equivariant_Q() == EquivariantP1Class());
        CHECK(equivariant_Q() * equivariant_R() == EquivariantP1Class());
    }

    TEST_CASE("pairs are validated") {
        CHECK_THROWS_AS(EquivariantP1Class(Polynomial::variable("t1"), T), DomainError);
        CHECK(EquivariantP1Class(T * T + Polynomial(3), Polynomial(3))
                  .satisfies_image_condition());
        CHECK(!EquivariantP1Class(Polynomial(0), Polynomial(1)).satisfies_image_condition());
        CHECK(equivariant_K().satisfies_image_condition());
    }

    TEST_CASE("arithmetic is componentwise") {
        const EquivariantP1Class k = equivariant_K();
        CHECK(k * equivariant_one() == k);
        CHECK(k - k == EquivariantP1Class());
        CHECK(k.pow(0) == equivariant_one());
        CHECK(k.pow(3) == k * k * k);
        CHECK(k.pow(2) == EquivariantP1Class(T * T, T * T));
        CHECK_THROWS_AS(k.pow(-1), DomainError);
    }
}

TEST_SUITE("pushforward") {
    TEST_CASE("normalization") {
        CHECK(pushforward(equivariant_Q()) == Polynomial(1));
        CHECK(pushforward(equivariant_R()) == Polynomial(1));
        CHECK(pushforward(equivariant_one()).is_zero());
        CHECK(pushforward(equivariant_K()) == Polynomial(-2));
    }

    TEST_CASE("closed forms for the three families") {
        const EquivariantP1Class k = equivariant_K();
        const EquivariantP1Class mkr = -k - equivariant_R();
        const EquivariantP1Class mkrq = mkr - equivariant_Q();
        for (int e = 1; e <= 10; ++e) {
            // K^e: zero for even e, -2t^(e-1) for odd e
            const Polynomial pk = pushforward(k.pow(e));
            if (e % 2 == 0)
                CHECK(pk.is_zero());
            else
                CHECK(pk == Rational(-2) * T.pow(e - 1));
            // (-K-R)^e: -t^(e-1) for even e, +t^(e-1) for odd e (e >= 2)
            const Polynomial pm = pushforward(mkr.pow(e));
            if (e == 1)
                CHECK(pm == Polynomial(1));
            else
                CHECK(pm == (e % 2 == 0 ? Rational(-1) : Rational(1)) * T.pow(e - 1));
            // (-K-R-Q)^e is the zero class
            CHECK(pushforward(mkrq.pow(e)).is_zero());
        }
    }

    TEST_CASE("the verification table covers all families and exponents") {
        const auto rows = pushforward_table(10);
        CHECK(rows.size() == 33);
        for (const auto& row : rows) {
            CHECK(row.ok);
            CHECK(row.expected == row.actual);
            CHECK((row.family == "K^e" || row.family == "(-K-R)^e" ||
                   row.family == "(-K-R-Q)^e"));
            CHECK(row.exponent >= 0);
            CHECK(row.exponent <= 10);
        }
        CHECK_THROWS_AS(pushforward_table(-1), DomainError);
        CHECK(pushforward_table(0).size() == 3);
    }

    TEST_CASE("the image condition guards localization") {
        CHECK_THROWS_AS(pushforward(EquivariantP1Class(Polynomial(0), Polynomial(1))),
                        LocalizationError);
        CHECK_THROWS_AS(pushforward(EquivariantP1Class(Polynomial(2), T + Polynomial(3))),
                        LocalizationError);
    }

    TEST_CASE("products of built-ins stay in the image") {
        std::mt19937 rng(1312u);
        std::uniform_int_distribution<int> pick(0, 3);
        const std::vector<EquivariantP1Class> gens{equivariant_K(), equivariant_Q(),
                                                   equivariant_R(), equivariant_one()};
        for (int trial = 0; trial < 50; ++trial) {
            EquivariantP1Class c = equivariant_one();
            for (int i = 0; i < 4; ++i) c = c * gens[pick(rng)];
            CHECK(c.satisfies_image_condition());
            CHECK_NOTHROW(pushforward(c));
        }
    }

    TEST_CASE("projection formula") {
        std::mt19937 rng(2718u);
        for (int trial = 0; trial < 20; ++trial) {
            const Polynomial p = testsupport::random_polynomial(rng, {"t"}, 3, 4);
            const EquivariantP1Class c =
                equivariant_K().pow(trial % 3) * equivariant_R();
            CHECK(pushforward(lift(p) * c) == p * pushforward(c));
            // lifted classes push to zero (fibers integrate to zero)
            CHECK(pushforward(lift(p)).is_zero());
        }
    }
}
