#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "chow/dual_tree.hpp"
#include "chow/errors.hpp"
#include "chow/stratum_ring.hpp"
#include "test_support.hpp"

using namespace chow;

namespace {
Polynomial V(const std::string& name) { return Polynomial::variable(name); }
}  // namespace

TEST_SUITE("stratum presentations") {
    TEST_CASE("the single-vertex tree is the smooth stratum") {
        const AnyPresentation p = build_presentation(tree_from_name("point"));
        CHECK(is_smooth(p));
        CHECK(std::get<SmoothStratumPresentation>(p).generator == "c2sl2");
        CHECK_THROWS_AS(build_singular_presentation(tree_from_name("point")), DomainError);
    }

    TEST_CASE("variables and group sizes per stratum") {
        const StratumPresentation edge = build_singular_presentation(tree_from_name("edge"));
        CHECK(edge.variables == std::vector<std::string>{"t1", "t2"});
        CHECK(edge.sigma == 2);

        const StratumPresentation chain2 = build_singular_presentation(tree_from_name("chain2"));
        CHECK(chain2.variables == std::vector<std::string>{"t1", "t2", "r1"});
        CHECK(chain2.sigma == 2);

        const StratumPresentation chain3 = build_singular_presentation(tree_from_name("chain3"));
        CHECK(chain3.variables == std::vector<std::string>{"t1", "t2", "r1", "r2"});
        CHECK(chain3.sigma == 2);

        const StratumPresentation star3 = build_singular_presentation(tree_from_name("star3"));
        CHECK(star3.variables == std::vector<std::string>{"t1", "t2", "t3"});
        CHECK(star3.sigma == 6);

        const StratumPresentation ex =
            build_singular_presentation(tree_from_name("paper-example-4edge"));
        CHECK(ex.variables == std::vector<std::string>{"t1", "t2", "t3", "r1"});
        CHECK(ex.sigma == 2);

        const DualTree star4 =
            make_tree({"h", "x", "y", "z", "w"},
                      {{"h", "x"}, {"h", "y"}, {"h", "z"}, {"h", "w"}});
        CHECK_THROWS_AS(build_presentation(star4), MultiplicityError);
    }

    TEST_CASE("the recorded action is the induced signed-permutation action") {
        for (const char* name : {"edge", "chain2", "chain3", "star3", "paper-example-4edge"}) {
            const StratumPresentation P = build_singular_presentation(tree_from_name(name));
            REQUIRE(P.automorphisms.size() == P.action.size());
            CHECK(P.sigma == static_cast<long>(P.action.size()));
            CHECK(is_group(P.action));
            for (std::size_t i = 0; i < P.action.size(); ++i)
                CHECK(P.action[i] == induced_signed_permutation(P.tree, P.automorphisms[i]));
        }
        // star3 permutes leaf variables with no sign changes
        const StratumPresentation star3 = build_singular_presentation(tree_from_name("star3"));
        for (const auto& s : star3.action)
            for (const auto& [var, image] : s.images()) CHECK(image.second == 1);
    }
}

TEST_SUITE("psi classes") {
    TEST_CASE("leaves and three-nodes") {
        const StratumPresentation edge = build_singular_presentation(tree_from_name("edge"));
        CHECK(psi_class(edge, "a", {"a", "b"}) == V("t1"));
        CHECK(psi_class(edge, "b", {"a", "b"}) == V("t2"));

        const StratumPresentation star3 = build_singular_presentation(tree_from_name("star3"));
        CHECK(psi_class(star3, "a", {"a", "b"}).is_zero());
        CHECK(psi_class(star3, "a", {"a", "c"}).is_zero());
        CHECK(psi_class(star3, "b", {"a", "b"}) == V("t1"));
        CHECK(psi_class(star3, "d", {"a", "d"}) == V("t3"));
    }

    TEST_CASE("two-nodes carry signs from the orientation") {
        // chain2 orientation: a has b at 0 and c at infinity
        const StratumPresentation chain2 = build_singular_presentation(tree_from_name("chain2"));
        CHECK(psi_class(chain2, "a", {"a", "b"}) == -V("r1"));
        CHECK(psi_class(chain2, "a", {"a", "c"}) == V("r1"));
        CHECK(psi_class(chain2, "b", {"a", "b"}) == V("t1"));
        CHECK(psi_class(chain2, "c", {"a", "c"}) == V("t2"));
        // the edge may be written in either vertex order
        CHECK(psi_class(chain2, "a", {"b", "a"}) == -V("r1"));
    }

    TEST_CASE("incidence is enforced") {
        const StratumPresentation chain2 = build_singular_presentation(tree_from_name("chain2"));
        CHECK_THROWS_AS(psi_class(chain2, "b", {"a", "c"}), DomainError);
        CHECK_THROWS_AS(psi_class(chain2, "a", {"b", "c"}), DomainError);
        CHECK_THROWS_AS(psi_class(chain2, "z", {"a", "b"}), DomainError);
    }

    TEST_CASE("the two psi classes at a two-node sum to zero") {
        for (const auto& t : enumerate_trees(4, 3)) {
            if (t.edges.empty()) continue;
            const StratumPresentation P = build_singular_presentation(t);
            for (const auto& v : degree_partition(t).two_nodes) {
                const auto nb = neighbors(t, v);
                REQUIRE(nb.size() == 2);
                CHECK((psi_class(P, v, {v, nb[0]}) + psi_class(P, v, {v, nb[1]})).is_zero());
            }
            for (const auto& v : degree_partition(t).leaves) {
                const auto nb = neighbors(t, v);
                CHECK(psi_class(P, v, {v, nb[0]}) == V(P.var_of_vertex.at(v)));
            }
            for (const auto& v : degree_partition(t).three_nodes)
                for (const auto& w : neighbors(t, v))
                    CHECK(psi_class(P, v, {v, w}).is_zero());
        }
    }
}

TEST_SUITE("invariance") {
    TEST_CASE("examples on the edge and chain strata") {
        const StratumPresentation edge = build_singular_presentation(tree_from_name("edge"));
        CHECK(is_invariant(edge, V("t1") + V("t2")));
        CHECK(is_invariant(edge, V("t1") * V("t2")));
        CHECK(!is_invariant(edge, V("t1")));
        CHECK(!is_invariant(edge, V("t1") - V("t2")));
        CHECK_THROWS_AS(is_invariant(edge, V("r1")), DomainError);

        const StratumPresentation chain2 = build_singular_presentation(tree_from_name("chain2"));
        CHECK(!is_invariant(chain2, V("r1")));
        CHECK(is_invariant(chain2, V("r1") * V("r1")));
        CHECK(is_invariant(chain2, V("t1") + V("t2")));
        CHECK(is_invariant(chain2, V("r1") * (V("t1") - V("t2"))));
        CHECK(!is_invariant(chain2, V("r1") * (V("t1") + V("t2"))));
    }

    TEST_CASE("the smooth stratum has a trivial group") {
        const SmoothStratumPresentation smooth;
        const Polynomial c = V("c2sl2");
        CHECK(is_invariant(smooth, c * c - 3 * c + Polynomial(7)));
        CHECK_THROWS_AS(is_invariant(smooth, V("t1")), DomainError);
    }

    TEST_CASE("averaging over the group produces invariants") {
        std::mt19937 rng(97531u);
        for (const char* name : {"edge", "chain2", "chain3", "star3", "paper-example-4edge"}) {
            const StratumPresentation P = build_singular_presentation(tree_from_name(name));
            for (int trial = 0; trial < 10; ++trial) {
                const Polynomial p = testsupport::random_polynomial(rng, P.variables, 3, 5);
                const Polynomial avg = reynolds_average(P.action, p);
                CHECK(is_invariant(P, avg));
                CHECK(reynolds_average(P.action, avg) == avg);  // idempotent
                if (is_invariant(P, p)) CHECK(avg == p);
            }
        }
    }

    TEST_CASE("make_invariant validates") {
        const StratumPresentation edge = build_singular_presentation(tree_from_name("edge"));
        const InvariantPolynomial a = make_invariant(edge, V("t1") + V("t2"));
        CHECK(a.value == V("t1") + V("t2"));
        CHECK(!is_smooth(a.presentation));
        CHECK_THROWS_AS(make_invariant(edge, V("t1")), DomainError);
        CHECK(make_invariant(SmoothStratumPresentation{}, Polynomial(5)).value == Polynomial(5));
    }
}
