#include "chow/stratum_ring.hpp"

#include <algorithm>

namespace chow {

AnyPresentation build_presentation(const DualTree& t) {
    validate_tree(t);
    if (t.vertices.size() == 1) return SmoothStratumPresentation{};
    if (max_degree(t) > 3)
        throw MultiplicityError("build_presentation: vertex degree exceeds 3");
    StratumPresentation P;
    P.tree = t;
    VariableBinding binding = variable_binding(t);
    P.variables = binding.variables;
    P.var_of_vertex = binding.var_of_vertex;
    P.vertex_of_var = binding.vertex_of_var;
    P.automorphisms = automorphism_group(t);
    for (const auto& g : P.automorphisms) {
        SignedPermutation sp = induced_signed_permutation(t, g);
        /* every bound variable appears, including on trees where a class of
         * vertices is fixed pointwise */
        for (const auto& var : P.variables)
            if (!sp.has(var)) throw InternalError("build_presentation: unbound variable");
        P.action.push_back(sp);
    }
    P.sigma = static_cast<long>(P.automorphisms.size());
    /* An automorphism fixing every leaf of a tree fixes the whole tree, so
     * the induced representation is faithful and the image is a genuine
     * group of the same order. */
    if (!is_group(P.action))
        throw InternalError("build_presentation: action is not a group");
    return P;
}

StratumPresentation build_singular_presentation(const DualTree& t) {
    AnyPresentation p = build_presentation(t);
    if (is_smooth(p))
        throw DomainError("expected a singular stratum, got the smooth one");
    return std::get<StratumPresentation>(std::move(p));
}

Polynomial psi_class(const StratumPresentation& P, const std::string& v,
                     const std::pair<std::string, std::string>& e) {
    const std::string& other = (e.first == v) ? e.second : e.first;
    if ((e.first != v && e.second != v) || !has_edge(P.tree, v, other))
        throw DomainError("psi_class: edge not incident to vertex '" + v + "'");
    switch (degree(P.tree, v)) {
        case 1:
            return Polynomial::variable(P.var_of_vertex.at(v));
        case 2: {
            const auto& [n0, ninf] = P.tree.orientation.at(v);
            Polynomial r = Polynomial::variable(P.var_of_vertex.at(v));
            if (other == ninf) return r;
            if (other == n0) return -r;
            throw InternalError("psi_class: orientation does not list the edge");
        }
        case 3:
            return Polynomial();
        default:
            throw MultiplicityError("psi_class: vertex degree exceeds 3");
    }
}

bool is_invariant(const StratumPresentation& P, const Polynomial& p) {
    for (const auto& var : p.variables())
        if (!P.vertex_of_var.count(var))
            throw DomainError("is_invariant: foreign variable '" + var + "'");
    return std::all_of(P.action.begin(), P.action.end(),
                       [&](const SignedPermutation& g) { return apply_action(g, p) == p; });
}

bool is_invariant(const SmoothStratumPresentation& P, const Polynomial& p) {
    for (const auto& var : p.variables())
        if (var != P.generator)
            throw DomainError("is_invariant: foreign variable '" + var + "'");
    return true;  // trivial group
}

bool is_invariant(const AnyPresentation& P, const Polynomial& p) {
    return std::visit([&](const auto& pres) { return is_invariant(pres, p); }, P);
}

InvariantPolynomial make_invariant(AnyPresentation presentation, Polynomial value) {
    if (!is_invariant(presentation, value))
        throw DomainError("polynomial is not invariant under the stratum action");
    return InvariantPolynomial{std::move(value), std::move(presentation)};
}

}  // namespace chow
