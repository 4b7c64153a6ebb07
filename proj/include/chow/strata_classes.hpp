#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chow/deformations.hpp"
#include "chow/dual_tree.hpp"
#include "chow/polynomial.hpp"
#include "chow/stratum_ring.hpp"

namespace chow {

/* Class of the closed stratum inside its own Chow ring: the product over
 * all edges of (psi at one endpoint + psi at the other), i.e. the top Chern
 * class of the normal bundle of the stratum closure.  Point tree ->
 * DomainError; vertex degree > 3 -> MultiplicityError. */
InvariantPolynomial gamma_class(const DualTree& t);

/* True iff some edge joins two vertices that both have degree >= 3, which
 * forces gamma to vanish (both psi factors of that edge are zero).  Defined
 * for every tree, including degree-4 witnesses. */
bool vanishing_predicate(const DualTree& t);

/* Restriction of the extended class of a (an invariant polynomial on the
 * stratum of gamma) to the deeper stratum of gamma_prime:
 *
 *   (1/sigma) * sum over all ordered deformations d: gamma_prime -> gamma
 *       of subst_d(a) * product over persistent edges of (psi + psi),
 *
 * evaluated in gamma_prime's ring; zero when no deformation exists.  Each
 * variable of gamma is substituted by the psi-class of gamma_prime at the
 * matching endpoint of the persistent edge lying over it (one-sided
 * variables split as r = (psi_inf - psi_0)/2, each side independently).
 *
 * Both trees must have at most 3 edges and degree <= 3.  a must be
 * invariant.  From the smooth stratum only constants restrict (its
 * generator has no psi-image); the point-to-point restriction is the
 * identity.  The default variant folds the per-deformation terms with
 * OpenMP; the serial variant is the reference. */
InvariantPolynomial restrict_extended_class(const DualTree& gamma, const Polynomial& a,
                                            const DualTree& gamma_prime);
InvariantPolynomial restrict_extended_class_serial(const DualTree& gamma, const Polynomial& a,
                                                   const DualTree& gamma_prime);

/* The per-deformation pieces, exposed for cross-checks: the substitution
 * image of a and the persistent-edge factor. */
Polynomial deformation_substitution(const StratumPresentation& gamma_pres,
                                    const StratumPresentation& prime_pres,
                                    const OrderedDeformation& d, const Polynomial& a);
Polynomial persistent_factor(const StratumPresentation& prime_pres, const OrderedDeformation& d);
Polynomial contracted_factor(const StratumPresentation& prime_pres, const OrderedDeformation& d);

/* A class on the whole space, represented by its restriction to each of the
 * five strata with <= 3 edges, in codimension order. */
struct GlobalChowClass {
    std::vector<std::pair<std::string, InvariantPolynomial>> components;

    const InvariantPolynomial& at(const std::string& stratum_name) const;
    bool operator==(const GlobalChowClass& o) const;
    bool operator!=(const GlobalChowClass& o) const { return !(*this == o); }
};

/* Restrictions of the stratum class of t (the unit class when t is the
 * point tree) to all five strata. */
GlobalChowClass global_gamma(const DualTree& t);

}  // namespace chow
