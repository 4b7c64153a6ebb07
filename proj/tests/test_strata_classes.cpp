#include <doctest.h>

#include <string>
#include <vector>

#include "chow/deformations.hpp"
#include "chow/dual_tree.hpp"
#include "chow/errors.hpp"
#include "chow/strata_classes.hpp"
#include "chow/stratum_ring.hpp"

using namespace chow;

namespace {
Polynomial V(const std::string& name) { return Polynomial::variable(name); }
}  // namespace

TEST_SUITE("stratum classes") {
    TEST_CASE("closed-form classes of the four singular strata") {
        CHECK(gamma_class(tree_from_name("edge")).value == V("t1") + V("t2"));
        CHECK(gamma_class(tree_from_name("chain2")).value ==
              (V("t1") - V("r1")) * (V("t2") + V("r1")));
        CHECK(gamma_class(tree_from_name("chain3")).value ==
              (V("t1") - V("r1")) * (V("r1") - V("r2")) * (V("t2") + V("r2")));
        CHECK(gamma_class(tree_from_name("star3")).value == V("t1") * V("t2") * V("t3"));
        CHECK_THROWS_AS(gamma_class(tree_from_name("point")), DomainError);
    }

    TEST_CASE("reversing one orientation rewrites the chain3 class") {
        const DualTree reoriented =
            make_tree({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"c", "d"}},
                      {{"a", {"b", "c"}}, {"c", {"d", "a"}}});
        CHECK(gamma_class(reoriented).value ==
              (V("t1") - V("r1")) * (V("r1") + V("r2")) * (V("t2") - V("r2")));
    }

    TEST_CASE("gamma is invariant, homogeneous of the edge count, and edge-factored") {
        for (const auto& t : enumerate_trees(3, 3)) {
            if (t.edges.empty()) continue;
            const InvariantPolynomial g = gamma_class(t);
            const StratumPresentation P = build_singular_presentation(t);
            CHECK(is_invariant(P, g.value));
            CHECK(g.value.is_homogeneous());
            CHECK(g.value.total_degree() == static_cast<long>(t.edges.size()));
            Polynomial product(1);
            for (const auto& [x, y] : t.edges)
                product *= psi_class(P, x, {x, y}) + psi_class(P, y, {x, y});
            CHECK(g.value == product);
        }
    }

    TEST_CASE("vanishing predicate") {
        CHECK(vanishing_predicate(tree_from_name("paper-example-5edge")));
        CHECK(gamma_class(tree_from_name("paper-example-5edge")).value.is_zero());
        for (const char* name : {"edge", "chain2", "chain3", "star3", "paper-example-4edge"}) {
            CHECK(!vanishing_predicate(tree_from_name(name)));
            CHECK(!gamma_class(tree_from_name(name)).value.is_zero());
        }
        CHECK(!vanishing_predicate(tree_from_name("point")));
        // on every enumerated tree the predicate decides gamma = 0 exactly
        for (const auto& t : enumerate_trees(6, 3)) {
            if (t.edges.empty()) continue;
            CHECK(vanishing_predicate(t) == gamma_class(t).value.is_zero());
        }
    }
}

TEST_SUITE("restriction") {
    TEST_CASE("restricting a stratum class to its own stratum returns it") {
        for (const char* name : {"edge", "chain2", "chain3", "star3"}) {
            const DualTree t = tree_from_name(name);
            CHECK(restrict_extended_class(t, Polynomial(1), t) == gamma_class(t));
        }
    }

    TEST_CASE("restrictions of the edge class") {
        const DualTree edge = tree_from_name("edge");
        CHECK(restrict_extended_class(edge, 1, tree_from_name("chain2")).value ==
              V("t1") + V("t2"));
        CHECK(restrict_extended_class(edge, 1, tree_from_name("chain3")).value ==
              V("t1") + V("t2"));
        CHECK(restrict_extended_class(edge, 1, tree_from_name("star3")).value ==
              V("t1") + V("t2") + V("t3"));
    }

    TEST_CASE("restrictions of the chain2 class") {
        const DualTree chain2 = tree_from_name("chain2");
        CHECK(restrict_extended_class(chain2, 1, tree_from_name("star3")).value ==
              V("t1") * V("t2") + V("t1") * V("t3") + V("t2") * V("t3"));
        // hand expansion: sum over the three contractions of chain3 of the
        // product of the two surviving edge factors
        const Polynomial expected = V("t1") * V("t2") + V("t1") * V("r1") -
                                    V("t2") * V("r2") + V("r1") * V("r2") -
                                    V("r1") * V("r1") - V("r2") * V("r2");
        CHECK(restrict_extended_class(chain2, 1, tree_from_name("chain3")).value == expected);
    }

    TEST_CASE("restricting a nonconstant class substitutes psi values") {
        // t1 + t2 on the edge pulls back to the sum of squared edge factors
        const Polynomial got =
            restrict_extended_class(tree_from_name("edge"), V("t1") + V("t2"),
                                    tree_from_name("chain3"))
                .value;
        const Polynomial expected = (V("t1") - V("r1")) * (V("t1") - V("r1")) +
                                    (V("r1") - V("r2")) * (V("r1") - V("r2")) +
                                    (V("t2") + V("r2")) * (V("t2") + V("r2"));
        CHECK(got == expected);
    }

    TEST_CASE("a nonzero class can restrict to zero through the hub") {
        // every persistent edge of a star3 deformation touches the hub,
        // whose psi class vanishes, so the substituted product dies
        CHECK(restrict_extended_class(tree_from_name("edge"), V("t1") * V("t2"),
                                      tree_from_name("star3"))
                  .value.is_zero());
    }

    TEST_CASE("directions with no deformations restrict to zero") {
        CHECK(restrict_extended_class(tree_from_name("star3"), 1, tree_from_name("chain3"))
                  .value.is_zero());
        CHECK(restrict_extended_class(tree_from_name("chain3"), 1, tree_from_name("star3"))
                  .value.is_zero());
        CHECK(restrict_extended_class(tree_from_name("chain3"), 1, tree_from_name("point"))
                  .value.is_zero());
        CHECK(restrict_extended_class(tree_from_name("chain2"), 1, tree_from_name("edge"))
                  .value.is_zero());
    }

    TEST_CASE("the smooth stratum restricts constants, and only constants") {
        const DualTree point = tree_from_name("point");
        CHECK(restrict_extended_class(point, Polynomial(5), tree_from_name("star3")).value ==
              Polynomial(5));
        const Polynomial mixed = Polynomial(2) + 3 * V("c2sl2");
        const InvariantPolynomial self = restrict_extended_class(point, mixed, point);
        CHECK(self.value == mixed);
        CHECK(is_smooth(self.presentation));
        CHECK_THROWS_AS(restrict_extended_class(point, V("c2sl2"), tree_from_name("edge")),
                        DomainError);
    }

    TEST_CASE("invalid inputs are rejected") {
        const DualTree edge = tree_from_name("edge");
        CHECK_THROWS_AS(restrict_extended_class(edge, V("t1"), tree_from_name("chain2")),
                        DomainError);  // not invariant
        CHECK_THROWS_AS(
            restrict_extended_class(tree_from_name("paper-example-4edge"), 1, edge),
            DomainError);  // too many edges
        // a degree-4 vertex forces a fourth edge, so the edge-count guard
        // fires first
        const DualTree star4 =
            make_tree({"h", "x", "y", "z", "w"},
                      {{"h", "x"}, {"h", "y"}, {"h", "z"}, {"h", "w"}});
        CHECK_THROWS_AS(restrict_extended_class(edge, 1, star4), DomainError);
    }

    TEST_CASE("restriction degree is class degree plus source edge count") {
        for (const char* from : {"edge", "chain2", "star3"}) {
            const DualTree gamma = tree_from_name(from);
            const StratumPresentation P = build_singular_presentation(gamma);
            const Polynomial a =
                reynolds_average(P.action, Polynomial::variable(P.variables.front()));
            for (const char* to : {"chain3", "star3"}) {
                const InvariantPolynomial r =
                    restrict_extended_class(gamma, a, tree_from_name(to));
                if (r.value.is_zero()) continue;
                CHECK(r.value.is_homogeneous());
                CHECK(r.value.total_degree() ==
                      a.total_degree() + static_cast<long>(gamma.edges.size()));
            }
        }
    }
}

TEST_SUITE("deformation factors") {
    TEST_CASE("contracted and persistent factors multiply to the source class") {
        const std::vector<std::pair<std::string, std::string>> pairs{
            {"edge", "chain2"},   {"edge", "chain3"},   {"edge", "star3"},
            {"chain2", "chain3"}, {"chain2", "star3"},  {"edge", "edge"},
            {"chain3", "chain3"}, {"star3", "star3"}};
        for (const auto& [tname, sname] : pairs) {
            const DualTree target = tree_from_name(tname);
            const DualTree source = tree_from_name(sname);
            const StratumPresentation prime = build_singular_presentation(source);
            const Polynomial g = gamma_class(source).value;
            for (const auto& d : enumerate_ordered_deformations(target, source))
                CHECK(contracted_factor(prime, d) * persistent_factor(prime, d) == g);
        }
    }

    TEST_CASE("substituting the unit class gives the unit") {
        const DualTree target = tree_from_name("edge");
        const DualTree source = tree_from_name("chain3");
        const StratumPresentation gp = build_singular_presentation(target);
        const StratumPresentation pp = build_singular_presentation(source);
        for (const auto& d : enumerate_ordered_deformations(target, source))
            CHECK(deformation_substitution(gp, pp, d, Polynomial(1)) == Polynomial(1));
    }
}

TEST_SUITE("global classes") {
    TEST_CASE("the point class is the unit everywhere") {
        const GlobalChowClass one = global_gamma(tree_from_name("point"));
        REQUIRE(one.components.size() == 5);
        for (const auto& [name, value] : one.components) CHECK(value.value == Polynomial(1));
        CHECK(one.at("chain3").value == Polynomial(1));
        CHECK_THROWS_AS(one.at("chain9"), DomainError);
    }

    TEST_CASE("component order follows codimension") {
        const GlobalChowClass g = global_gamma(tree_from_name("edge"));
        std::vector<std::string> names;
        for (const auto& [name, value] : g.components) names.push_back(name);
        CHECK(names == std::vector<std::string>{"point", "edge", "chain2", "chain3", "star3"});
        CHECK(g.at("point").value.is_zero());
        CHECK(g.at("edge").value == V("t1") + V("t2"));
        CHECK(g.at("chain2").value == V("t1") + V("t2"));
        CHECK(g.at("chain3").value == V("t1") + V("t2"));
        CHECK(g.at("star3").value == V("t1") + V("t2") + V("t3"));
    }

    TEST_CASE("deep classes die on shallow strata") {
        const GlobalChowClass g = global_gamma(tree_from_name("star3"));
        CHECK(g.at("point").value.is_zero());
        CHECK(g.at("edge").value.is_zero());
        CHECK(g.at("chain2").value.is_zero());
        CHECK(g.at("chain3").value.is_zero());
        CHECK(g.at("star3").value == V("t1") * V("t2") * V("t3"));
        CHECK_THROWS_AS(global_gamma(tree_from_name("paper-example-4edge")), DomainError);
    }

    TEST_CASE("equality compares componentwise") {
        CHECK(global_gamma(tree_from_name("edge")) == global_gamma(tree_from_name("edge")));
        CHECK(global_gamma(tree_from_name("edge")) != global_gamma(tree_from_name("chain2")));
    }
}

TEST_SUITE("restriction kernels") {
    TEST_CASE("parallel and serial restriction agree") {
        for (const char* from : {"edge", "chain2", "chain3", "star3"}) {
            const DualTree gamma = tree_from_name(from);
            const StratumPresentation P = build_singular_presentation(gamma);
            Polynomial a(1);
            for (const auto& v : P.variables) a *= (V(v) + Polynomial(1));
            a = reynolds_average(P.action, a);
            for (const char* to : {"chain2", "chain3", "star3"}) {
                const DualTree prime = tree_from_name(to);
                CHECK(restrict_extended_class(gamma, a, prime) ==
                      restrict_extended_class_serial(gamma, a, prime));
            }
        }
    }
}
