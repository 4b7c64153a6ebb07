#include "chow/strata_classes.hpp"

#include <algorithm>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chow {

InvariantPolynomial gamma_class(const DualTree& t) {
    validate_tree(t);
    if (t.vertices.size() == 1)
        throw DomainError("gamma_class: undefined on the smooth stratum");
    StratumPresentation P = build_singular_presentation(t);
    Polynomial product(Rational(1));
    for (const auto& e : t.edges)
        product = product * (psi_class(P, e.first, e) + psi_class(P, e.second, e));
    return make_invariant(AnyPresentation(std::move(P)), std::move(product));
}

bool vanishing_predicate(const DualTree& t) {
    validate_tree(t);
    for (const auto& [a, b] : t.edges)
        if (degree(t, a) >= 3 && degree(t, b) >= 3) return true;
    return false;
}

namespace {

void check_restriction_scope(const DualTree& t, const char* which) {
    if (t.edges.size() > 3)
        throw DomainError(std::string("restrict_extended_class: ") + which +
                          " tree has more than 3 edges");
    if (max_degree(t) > 3)
        throw MultiplicityError(std::string("restrict_extended_class: ") + which +
                                " tree has a vertex of degree > 3");
}

/* psi-class of the source at the endpoint of the persistent edge over the
 * target edge e, on the side of the fiber over target vertex v. */
Polynomial psi_over(const StratumPresentation& prime_pres,
                    const std::map<std::pair<std::string, std::string>,
                                   std::pair<std::string, std::string>>& over,
                    const DualTree& target, const std::string& v, const std::string& v_other) {
    for (const auto& e : target.edges) {
        if ((e.first == v && e.second == v_other)) {
            const auto& pe = over.at(e);
            return psi_class(prime_pres, pe.first, pe);
        }
        if (e.first == v_other && e.second == v) {
            const auto& pe = over.at(e);
            return psi_class(prime_pres, pe.second, pe);
        }
    }
    throw InternalError("psi_over: target edge not found");
}

std::map<std::string, Polynomial> substitution_map(const StratumPresentation& gamma_pres,
                                                   const StratumPresentation& prime_pres,
                                                   const OrderedDeformation& d) {
    const auto over = persistent_edge_over(d);
    const DualTree& target = gamma_pres.tree;
    std::map<std::string, Polynomial> images;
    for (const auto& [v, var] : gamma_pres.var_of_vertex) {
        if (degree(target, v) == 1) {
            const std::string other = neighbors(target, v).at(0);
            images[var] = psi_over(prime_pres, over, target, v, other);
        } else {
            const auto& [n0, ninf] = target.orientation.at(v);
            Polynomial psi_inf = psi_over(prime_pres, over, target, v, ninf);
            Polynomial psi_0 = psi_over(prime_pres, over, target, v, n0);
            images[var] = (psi_inf - psi_0) * Rational(1, 2);
        }
    }
    return images;
}

}  // namespace

Polynomial deformation_substitution(const StratumPresentation& gamma_pres,
                                    const StratumPresentation& prime_pres,
                                    const OrderedDeformation& d, const Polynomial& a) {
    return a.substitute(substitution_map(gamma_pres, prime_pres, d));
}

Polynomial persistent_factor(const StratumPresentation& prime_pres, const OrderedDeformation& d) {
    Polynomial product(Rational(1));
    for (const auto& e : persistent_edges(d))
        product = product * (psi_class(prime_pres, e.first, e) + psi_class(prime_pres, e.second, e));
    return product;
}

Polynomial contracted_factor(const StratumPresentation& prime_pres, const OrderedDeformation& d) {
    Polynomial product(Rational(1));
    for (const auto& e : contracted_edges(d))
        product = product * (psi_class(prime_pres, e.first, e) + psi_class(prime_pres, e.second, e));
    return product;
}

namespace {

enum class FoldMode { serial, parallel };

InvariantPolynomial restrict_impl(const DualTree& gamma, const Polynomial& a,
                                  const DualTree& gamma_prime, FoldMode mode) {
    validate_tree(gamma);
    validate_tree(gamma_prime);
    check_restriction_scope(gamma, "shallow");
    check_restriction_scope(gamma_prime, "deep");

    AnyPresentation prime_any = build_presentation(gamma_prime);

    /* smooth-stratum source: only constant classes have psi-images */
    if (gamma.vertices.size() == 1) {
        if (!is_invariant(SmoothStratumPresentation{}, a))
            throw DomainError("restrict_extended_class: class not in the smooth-stratum ring");
        if (gamma_prime.vertices.size() == 1)
            return make_invariant(std::move(prime_any), a);  // identity restriction
        if (!a.is_constant())
            throw DomainError("restrict_extended_class: only constants restrict from the "
                              "smooth stratum (its generator has no psi-image)");
        return make_invariant(std::move(prime_any), a);
    }

    StratumPresentation gamma_pres = build_singular_presentation(gamma);
    if (!is_invariant(gamma_pres, a))
        throw DomainError("restrict_extended_class: class is not invariant on its stratum");
    if (gamma_prime.vertices.size() == 1)
        return make_invariant(std::move(prime_any), Polynomial());  // deeper to shallower: zero

    const StratumPresentation& prime_pres = std::get<StratumPresentation>(prime_any);
    std::vector<OrderedDeformation> defs = enumerate_ordered_deformations(gamma, gamma_prime);
    if (defs.empty()) return make_invariant(std::move(prime_any), Polynomial());

    std::vector<Polynomial> terms(defs.size());
    if (mode == FoldMode::parallel) {
        /* exceptions must not escape the parallel region; capture the first
         * and rethrow it on the calling thread */
        std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long i = 0; i < static_cast<long>(defs.size()); ++i) {
            try {
                terms[i] = deformation_substitution(gamma_pres, prime_pres, defs[i], a) *
                           persistent_factor(prime_pres, defs[i]);
            } catch (...) {
#ifdef _OPENMP
#pragma omp critical(chow_restrict_failure)
#endif
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else {
        for (std::size_t i = 0; i < defs.size(); ++i)
            terms[i] = deformation_substitution(gamma_pres, prime_pres, defs[i], a) *
                       persistent_factor(prime_pres, defs[i]);
    }

    /* deterministic fold in enumeration order, then the 1/sigma average */
    Polynomial sum;
    for (const auto& term : terms) sum += term;
    sum = sum * Rational(1, gamma_pres.sigma);
    return make_invariant(std::move(prime_any), std::move(sum));
}

}  // namespace

InvariantPolynomial restrict_extended_class(const DualTree& gamma, const Polynomial& a,
                                            const DualTree& gamma_prime) {
    return restrict_impl(gamma, a, gamma_prime, FoldMode::parallel);
}

InvariantPolynomial restrict_extended_class_serial(const DualTree& gamma, const Polynomial& a,
                                                   const DualTree& gamma_prime) {
    return restrict_impl(gamma, a, gamma_prime, FoldMode::serial);
}

const InvariantPolynomial& GlobalChowClass::at(const std::string& stratum_name) const {
    for (const auto& [name, value] : components)
        if (name == stratum_name) return value;
    throw DomainError("GlobalChowClass: unknown stratum '" + stratum_name + "'");
}

bool GlobalChowClass::operator==(const GlobalChowClass& o) const {
    if (components.size() != o.components.size()) return false;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].first != o.components[i].first) return false;
        if (components[i].second != o.components[i].second) return false;
    }
    return true;
}

GlobalChowClass global_gamma(const DualTree& t) {
    validate_tree(t);
    if (stratum_name_of(t).empty())
        throw DomainError("global_gamma: tree is not one of the five strata");
    GlobalChowClass out;
    for (const auto& name : stratum_names()) {
        DualTree target = tree_from_name(name);
        out.components.emplace_back(name, restrict_extended_class(t, Polynomial(1), target));
    }
    return out;
}

}  // namespace chow
