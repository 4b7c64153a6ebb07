#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "chow/dual_tree.hpp"
#include "chow/equivariant_p1.hpp"
#include "chow/errors.hpp"
#include "chow/mumford.hpp"
#include "chow/polynomial.hpp"
#include "chow/stratum_ring.hpp"

using namespace chow;

namespace {
Polynomial V(const std::string& name) { return Polynomial::variable(name); }
const Polynomial C = Polynomial::variable("c2sl2");
}  // namespace

TEST_SUITE("chern data") {
    TEST_CASE("roots per stratum") {
        const ChernData edge = chern_roots(tree_from_name("edge"));
        REQUIRE(edge.roots.size() == 3);
        CHECK(edge.roots == std::vector<Polynomial>{Polynomial(), V("t1"), V("t2")});
        CHECK(edge.c1 == V("t1") + V("t2"));
        CHECK(edge.c2 == V("t1") * V("t2"));
        CHECK(edge.c3.is_zero());

        const ChernData chain3 = chern_roots(tree_from_name("chain3"));
        CHECK(chain3.roots == std::vector<Polynomial>{Polynomial(), V("t1"), V("t2")});

        const ChernData star3 = chern_roots(tree_from_name("star3"));
        CHECK(star3.roots == std::vector<Polynomial>{V("t1"), V("t2"), V("t3")});
        CHECK(star3.c1 == V("t1") + V("t2") + V("t3"));
        CHECK(star3.c2 == V("t1") * V("t2") + V("t1") * V("t3") + V("t2") * V("t3"));
        CHECK(star3.c3 == V("t1") * V("t2") * V("t3"));

        const ChernData smooth = chern_roots(tree_from_name("point"));
        const Polynomial u = V(kSmoothWeightVariable);
        CHECK(smooth.roots == std::vector<Polynomial>{2 * u, Polynomial(), -2 * u});
        CHECK(smooth.c1.is_zero());
        CHECK(smooth.c2 == C);  // -4u^2 with u^2 = -c2sl2/4
        CHECK(smooth.c3.is_zero());

        CHECK_THROWS_AS(chern_roots(tree_from_name("paper-example-4edge")), DomainError);
    }

    TEST_CASE("chern classes are invariant in their stratum") {
        for (const char* name : {"edge", "chain2", "chain3", "star3"}) {
            const ChernData data = chern_roots(tree_from_name(name));
            const auto& P = std::get<StratumPresentation>(data.presentation);
            CHECK(is_invariant(P, data.c1));
            CHECK(is_invariant(P, data.c2));
            CHECK(is_invariant(P, data.c3));
        }
    }

    TEST_CASE("u reduction") {
        const Polynomial u = V(kSmoothWeightVariable);
        CHECK(u_reduce(u * u) == Rational(-1, 4) * C);
        CHECK(u_reduce(u * u * u * u) == Rational(1, 16) * C * C);
        CHECK(u_reduce(Polynomial(7)) == Polynomial(7));
        CHECK(u_reduce(C + Polynomial(1)) == C + Polynomial(1));
        CHECK_THROWS_AS(u_reduce(u), InternalError);
        CHECK_THROWS_AS(u_reduce(u * u * u), InternalError);
    }
}

TEST_SUITE("mumford classes") {
    TEST_CASE("closed forms on the smooth stratum") {
        const DualTree point = tree_from_name("point");
        CHECK(kappa(point, 1).value.is_zero());
        CHECK(kappa(point, 3).value.is_zero());
        CHECK(kappa(point, 5).value.is_zero());
        CHECK(kappa(point, 2).value == 2 * C);
        CHECK(kappa(point, 4).value == Rational(-2) * C * C);
        CHECK(kappa(point, 6).value == 2 * C * C * C);
        CHECK_THROWS_AS(kappa(point, 0), DomainError);
        CHECK_THROWS_AS(kappa(point, -1), DomainError);
    }

    TEST_CASE("kappa on singular strata is minus the leaf power sum") {
        CHECK(kappa(tree_from_name("edge"), 1).value == -(V("t1") + V("t2")));
        CHECK(kappa(tree_from_name("edge"), 2).value ==
              -(V("t1") * V("t1") + V("t2") * V("t2")));
        CHECK(kappa(tree_from_name("chain2"), 3).value ==
              -(V("t1").pow(3) + V("t2").pow(3)));
        CHECK(kappa(tree_from_name("chain3"), 1).value == -(V("t1") + V("t2")));
        CHECK(kappa(tree_from_name("star3"), 1).value == -(V("t1") + V("t2") + V("t3")));
        CHECK(kappa(tree_from_name("star3"), 2).value ==
              -(V("t1").pow(2) + V("t2").pow(2) + V("t3").pow(2)));
    }

    TEST_CASE("kappa is an invariant class") {
        for (const char* name : {"edge", "chain2", "chain3", "star3", "point"}) {
            const DualTree t = tree_from_name(name);
            for (int m = 1; m <= 4; ++m) {
                const InvariantPolynomial k = kappa(t, m);
                CHECK(is_invariant(k.presentation, k.value));
            }
        }
    }

    TEST_CASE("kappa_0 is the geometric constant, not the naive power sum") {
        CHECK(kappa_zero() == -2);
        CHECK(kappa_zero_naive(tree_from_name("edge")) == -2);
        CHECK(kappa_zero_naive(tree_from_name("chain2")) == -2);
        CHECK(kappa_zero_naive(tree_from_name("chain3")) == -2);
        CHECK(kappa_zero_naive(tree_from_name("star3")) == -3);  // the divergence
        CHECK_THROWS_AS(kappa_zero_naive(tree_from_name("point")), DomainError);
    }
}

TEST_SUITE("newton bridge") {
    TEST_CASE("kappa equals minus the power sum of the chern roots") {
        for (const char* name : {"point", "edge", "chain2", "chain3", "star3"}) {
            const DualTree t = tree_from_name(name);
            const ChernData data = chern_roots(t);
            for (int m = 1; m <= 6; ++m)
                CHECK(kappa(t, m).value == -power_sum_from_chern(data, m));
        }
        CHECK_THROWS_AS(power_sum_from_chern(chern_roots(tree_from_name("edge")), 0),
                        DomainError);
    }

    TEST_CASE("the first three chern identities hold on every stratum") {
        for (const char* name : {"point", "edge", "chain2", "chain3", "star3"})
            CHECK(verify_defmumpol(tree_from_name(name)));
    }

    TEST_CASE("newton recurrence against direct root powers on the star") {
        const ChernData data = chern_roots(tree_from_name("star3"));
        for (int m = 1; m <= 8; ++m) {
            Polynomial direct;
            for (const auto& root : data.roots) direct += root.pow(m);
            CHECK(power_sum_from_chern(data, m) == direct);
        }
    }
}

TEST_SUITE("localization bridge") {
    TEST_CASE("edge kappa classes come from the fiberwise pushforward") {
        /* The relative log-cotangent family on the doubled line pushes
         * forward to sign * t^m; summing its two leaf substitutions
         * reproduces kappa_m on the edge stratum. */
        const EquivariantP1Class family = -equivariant_K() - equivariant_R();
        for (int m = 1; m <= 8; ++m) {
            const Polynomial pushed = pushforward(family.pow(m + 1));
            const Polynomial total =
                pushed.substitute({{"t", V("t1")}}) + pushed.substitute({{"t", V("t2")}});
            const Rational sign = (m % 2 == 0) ? Rational(-1) : Rational(1);
            CHECK(kappa(tree_from_name("edge"), m).value == sign * total);
        }
    }
}
