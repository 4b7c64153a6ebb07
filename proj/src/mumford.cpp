#include "chow/mumford.hpp"

namespace chow {

const char* const kSmoothWeightVariable = "u";

Polynomial u_reduce(const Polynomial& p) {
    const std::string u = kSmoothWeightVariable;
    const Polynomial usq_image =
        Polynomial::variable("c2sl2") * Rational(-1, 4);
    Polynomial out;
    for (const auto& [m, coeff] : p.terms()) {
        int e = m.exponent_of(u);
        if (e % 2 != 0)
            throw InternalError("u_reduce: odd power of the internal weight variable");
        std::vector<std::pair<std::string, int>> rest;
        for (const auto& [name, exp] : m.factors())
            if (name != u) rest.emplace_back(name, exp);
        Polynomial reduced = Polynomial::term(coeff, Monomial::from_factors(rest));
        out += reduced * usq_image.pow(e / 2);
    }
    return out;
}

ChernData chern_roots(const DualTree& t) {
    validate_tree(t);
    const std::string name = stratum_name_of(t);
    if (name.empty())
        throw DomainError("chern_roots: tree is not one of the five strata");
    ChernData data;
    data.presentation = build_presentation(t);
    if (name == "point") {
        Polynomial u = Polynomial::variable(kSmoothWeightVariable);
        data.roots = {u * Rational(2), Polynomial(), u * Rational(-2)};
        data.c1 = u_reduce(elementary_symmetric(data.roots, 1));
        data.c2 = u_reduce(elementary_symmetric(data.roots, 2));
        data.c3 = u_reduce(elementary_symmetric(data.roots, 3));
        return data;
    }
    const auto& pres = std::get<StratumPresentation>(data.presentation);
    std::vector<Polynomial> leaf_vars;
    for (const auto& var : pres.variables)
        if (variable_class(var) == 0) leaf_vars.push_back(Polynomial::variable(var));
    if (leaf_vars.size() == 2) {
        data.roots = {Polynomial(), leaf_vars[0], leaf_vars[1]};
    } else if (leaf_vars.size() == 3) {
        data.roots = {leaf_vars[0], leaf_vars[1], leaf_vars[2]};
    } else {
        throw InternalError("chern_roots: unexpected leaf count");
    }
    data.c1 = elementary_symmetric(data.roots, 1);
    data.c2 = elementary_symmetric(data.roots, 2);
    data.c3 = elementary_symmetric(data.roots, 3);
    return data;
}

InvariantPolynomial kappa(const DualTree& t, int m) {
    if (m < 1) throw DomainError("kappa: m must be >= 1 (kappa_zero is separate)");
    validate_tree(t);
    const std::string name = stratum_name_of(t);
    if (name.empty()) throw DomainError("kappa: tree is not one of the five strata");
    if (name == "point") {
        Polynomial u = Polynomial::variable(kSmoothWeightVariable);
        std::vector<Polynomial> roots{u * Rational(2), Polynomial(), u * Rational(-2)};
        Polynomial value = -u_reduce(power_sum(roots, m));
        return make_invariant(SmoothStratumPresentation{}, std::move(value));
    }
    StratumPresentation pres = build_singular_presentation(t);
    std::vector<Polynomial> leaf_vars;
    for (const auto& var : pres.variables)
        if (variable_class(var) == 0) leaf_vars.push_back(Polynomial::variable(var));
    Polynomial pm = power_sum(leaf_vars, m);
    Polynomial value = -(transfer_sum(pres.action, pm) * Rational(1, pres.sigma));
    return make_invariant(AnyPresentation(std::move(pres)), std::move(value));
}

int kappa_zero() { return -2; }

long kappa_zero_naive(const DualTree& t) {
    /* the m = 0 power sum of the leaf variables is just the leaf count */
    validate_tree(t);
    if (t.vertices.size() == 1)
        throw DomainError("kappa_zero_naive: the power-sum formula lives on singular strata");
    return -static_cast<long>(degree_partition(t).leaves.size());
}

Polynomial power_sum_from_chern(const ChernData& data, int m) {
    if (m < 1) throw DomainError("power_sum_from_chern: m must be >= 1");
    std::vector<Polynomial> p(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) {
        Polynomial v = data.c1 * (i == 1 ? Polynomial(1) : p[i - 1]);
        if (i == 2) v -= data.c2 * Rational(2);
        if (i >= 3) v -= data.c2 * p[i - 2];
        if (i == 3) v += data.c3 * Rational(3);
        if (i >= 4) v += data.c3 * p[i - 3];
        p[i] = v;
    }
    return p[m];
}

bool verify_defmumpol(const DualTree& t) {
    ChernData data = chern_roots(t);
    const Polynomial& c1 = data.c1;
    const Polynomial& c2 = data.c2;
    const Polynomial& c3 = data.c3;
    Polynomial k1 = kappa(t, 1).value;
    Polynomial k2 = kappa(t, 2).value;
    Polynomial k3 = kappa(t, 3).value;
    bool ok1 = (k1 == -c1);
    bool ok2 = (k2 == c2 * Rational(2) - c1 * c1);
    bool ok3 = (k3 == -(c1 * c1 * c1) + c1 * c2 * Rational(3) - c3 * Rational(3));
    return ok1 && ok2 && ok3;
}

}  // namespace chow
