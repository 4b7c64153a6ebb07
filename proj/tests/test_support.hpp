#pragma once

#include <random>
#include <string>
#include <vector>

#include "chow/polynomial.hpp"

namespace testsupport {

/* Deterministic random polynomial: term_count draws of a monomial of degree
 * <= max_degree over vars with a small rational coefficient. */
inline chow::Polynomial random_polynomial(std::mt19937& rng,
                                          const std::vector<std::string>& vars,
                                          int max_degree, int term_count) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> denom(1, 5);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    chow::Polynomial p;
    for (int i = 0; i < term_count; ++i) {
        chow::Monomial m;
        const int d = deg(rng);
        for (int j = 0; j < d; ++j) m = m * chow::Monomial::variable(vars[pick(rng)]);
        p += chow::Polynomial::term(chow::Rational(coeff(rng), denom(rng)), m);
    }
    return p;
}

}  // namespace testsupport
