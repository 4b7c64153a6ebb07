#pragma once

#include <vector>

#include "chow/dual_tree.hpp"
#include "chow/polynomial.hpp"
#include "chow/stratum_ring.hpp"

namespace chow {

/* Chern data of the rank-3 bundle obtained by pushing the dual dualizing
 * sheaf down the universal curve, per stratum.  The roots list always has
 * exactly three degree-1 entries; on the smooth stratum they live in an
 * internal weight variable u with u^2 identified with -c2sl2/4, and every
 * exported polynomial (c_i, kappa) is u-free. */
struct ChernData {
    AnyPresentation presentation;
    std::vector<Polynomial> roots;
    Polynomial c1, c2, c3;
};

/* Internal weight variable of the smooth stratum's root system. */
extern const char* const kSmoothWeightVariable;  // "u"

/* Replaces even powers of u via u^2 = -c2sl2/4; odd powers raise
 * InternalError (they cancel in every well-formed computation). */
Polynomial u_reduce(const Polynomial& p);

/* Chern roots and classes for each of the five strata: {0, t1, t2} on the
 * two-leaf strata, {t1, t2, t3} on the three-leaf star, {2u, 0, -2u} on the
 * smooth stratum.  Other trees raise DomainError. */
ChernData chern_roots(const DualTree& t);

/* Mumford class kappa_m, m >= 1 (m = 0 is DomainError; see kappa_zero):
 * minus the m-th power sum of the leaf variables on singular strata
 * (computed through the transfer sum over the stratum action divided by
 * sigma), minus the u-reduced power sum of the sl2 weights on the smooth
 * stratum. */
InvariantPolynomial kappa(const DualTree& t, int m);

/* kappa_0 = -2 on every stratum: the degree of the dualizing sheaf of a
 * genus-0 curve.  Hard-coded: the power-sum formula computes -delta_1
 * instead, which disagrees on the star stratum (-3); the geometric constant
 * wins. */
int kappa_zero();

/* The naive m = 0 specialization of the power-sum formula, exposed so tests
 * can document where it diverges from kappa_zero(). */
long kappa_zero_naive(const DualTree& t);

/* Power sum of the Chern roots computed through the Newton recurrence
 * p_m = c1 p_{m-1} - c2 p_{m-2} + c3 p_{m-3} (e_k = 0 past rank 3),
 * u-reduced on the smooth stratum. */
Polynomial power_sum_from_chern(const ChernData& data, int m);

/* True iff kappa_1 = -c1, kappa_2 = 2 c2 - c1^2 and
 * kappa_3 = -c1^3 + 3 c1 c2 - 3 c3 hold exactly in the stratum ring. */
bool verify_defmumpol(const DualTree& t);

}  // namespace chow
