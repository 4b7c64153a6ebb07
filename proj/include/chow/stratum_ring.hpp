#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "chow/dual_tree.hpp"
#include "chow/polynomial.hpp"

namespace chow {

/* Rational Chow ring of a singular stratum: the free polynomial ring on one
 * degree-1 variable per leaf (t) and per two-node component (r), together
 * with the signed permutation action of the tree automorphisms.  Invariants
 * under that action are the actual Chow classes. */
struct StratumPresentation {
    DualTree tree;
    std::vector<std::string> variables;  // t1..t_d1 then r1..r_d2
    std::map<std::string, std::string> var_of_vertex;
    std::map<std::string, std::string> vertex_of_var;
    std::vector<TreeAutomorphism> automorphisms;
    std::vector<SignedPermutation> action;  // aligned with automorphisms
    long sigma = 0;                         // order of the automorphism group
};

/* Chow ring of the open smooth stratum: the univariate polynomial ring on
 * one degree-2 generator. */
struct SmoothStratumPresentation {
    std::string generator = "c2sl2";
};

using AnyPresentation = std::variant<SmoothStratumPresentation, StratumPresentation>;

inline bool is_smooth(const AnyPresentation& p) {
    return std::holds_alternative<SmoothStratumPresentation>(p);
}

/* Single-vertex tree -> smooth presentation; anything else with max degree
 * <= 3 -> singular presentation; degree > 3 -> MultiplicityError. */
AnyPresentation build_presentation(const DualTree& t);

/* As above but requires a singular stratum (point tree -> DomainError). */
StratumPresentation build_singular_presentation(const DualTree& t);

/* First Chern class of the tangent line at the node of edge e on the
 * component v: t_v at a leaf, +/- r_v at a two-node vertex (+ toward the
 * infinity neighbor, - toward the 0 neighbor), 0 at a three-node vertex.
 * DomainError if e is not incident to v. */
Polynomial psi_class(const StratumPresentation& P, const std::string& v,
                     const std::pair<std::string, std::string>& e);

/* True iff p is fixed by every group element.  Variables of p outside the
 * presentation raise DomainError. */
bool is_invariant(const StratumPresentation& P, const Polynomial& p);
bool is_invariant(const SmoothStratumPresentation& P, const Polynomial& p);
bool is_invariant(const AnyPresentation& P, const Polynomial& p);

/* A polynomial paired with the presentation it is invariant in; the
 * constructor-check is make_invariant (DomainError when not invariant). */
struct InvariantPolynomial {
    Polynomial value;
    AnyPresentation presentation;

    bool operator==(const InvariantPolynomial& o) const { return value == o.value; }
    bool operator!=(const InvariantPolynomial& o) const { return !(*this == o); }
};

InvariantPolynomial make_invariant(AnyPresentation presentation, Polynomial value);

}  // namespace chow
