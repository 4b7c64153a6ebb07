#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chow/errors.hpp"
#include "chow/rational.hpp"

namespace chow {

/* Variables are ordered: node-smoothing variables t1 < t2 < ... come first,
 * then one-sided variables r1 < r2 < ..., then everything else by name. */
int variable_class(const std::string& name);  // 0 = t-indexed, 1 = r-indexed, 2 = other
bool variable_less(const std::string& a, const std::string& b);
bool valid_variable_name(const std::string& name);

struct VariableLess {
    bool operator()(const std::string& a, const std::string& b) const {
        return variable_less(a, b);
    }
};

/* Product of variable powers, kept sorted by variable order with all
 * exponents strictly positive.  The empty product is the unit monomial. */
class Monomial {
public:
    Monomial() = default;

    static Monomial unit() { return Monomial(); }
    static Monomial variable(const std::string& name, int exponent = 1);
    /* From (variable, exponent) pairs; merges duplicates, drops zeros. */
    static Monomial from_factors(const std::vector<std::pair<std::string, int>>& factors);

    const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }
    int total_degree() const;
    int exponent_of(const std::string& name) const;
    bool is_unit() const { return factors_.empty(); }

    Monomial operator*(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string to_string() const;  // "t1^2*t2*r1"; unit is "1"

private:
    std::vector<std::pair<std::string, int>> factors_;
};

/* Graded-lexicographic order: higher total degree first; ties broken
 * lexicographically in the variable order above.  Descending, so that map
 * iteration yields the leading term first. */
struct MonomialOrderDesc {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/* Compares in ascending graded-lex order; returns <0, 0, >0. */
int compare_monomials(const Monomial& a, const Monomial& b);

/* Total-degree cap applied to every polynomial product.  Default 64; the
 * CHOW_STRATA_DEGREE_BOUND environment variable overrides the default at
 * first use. */
int degree_bound();
void set_degree_bound(int bound);

/* Exact multivariate polynomial over the rationals, stored as a canonical
 * term map (no zero coefficients, graded-lex ordered). */
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrderDesc>;

    Polynomial() = default;                  // zero
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT: implicit by design
    Polynomial(const Rational& c);           // NOLINT: implicit by design
    explicit Polynomial(TermMap terms);

    static Polynomial variable(const std::string& name);
    static Polynomial term(const Rational& coeff, const Monomial& m);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /* The coefficient of the unit monomial. */
    Rational constant_term() const { return coefficient_of(Monomial::unit()); }
    Rational coefficient_of(const Monomial& m) const;

    /* Degree of the zero polynomial is -1 by convention. */
    int total_degree() const;
    bool is_homogeneous() const;
    std::set<std::string, VariableLess> variables() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

    Polynomial pow(int n) const;  // n >= 0; throws DegreeBoundError past the cap

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /* Ring homomorphism sending each variable to its image.  Every variable
     * occurring in this polynomial must have an image (DomainError). */
    Polynomial substitute(const std::map<std::string, Polynomial>& images) const;

    /* Sum of the homogeneous parts of the given total degree. */
    Polynomial homogeneous_part(int degree) const;

    std::string to_string() const;

private:
    void insert_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

/* Variable -> (variable, sign) map; the linear substitution x -> sign * y. */
class SignedPermutation {
public:
    using ImageMap = std::map<std::string, std::pair<std::string, int>, VariableLess>;

    SignedPermutation() = default;
    explicit SignedPermutation(ImageMap images);

    static SignedPermutation identity(const std::vector<std::string>& variables);

    void set_image(const std::string& var, const std::string& image, int sign);
    const ImageMap& images() const { return images_; }
    bool has(const std::string& var) const { return images_.count(var) != 0; }

    /* Bijection from its domain onto its domain with signs in {+1, -1}. */
    bool is_valid() const;
    SignedPermutation inverse() const;  // DomainError if not valid
    bool is_identity() const;

    bool operator==(const SignedPermutation& o) const { return images_ == o.images_; }
    bool operator!=(const SignedPermutation& o) const { return !(*this == o); }

    std::string to_string() const;  // "t1 -> t2, t2 -> t1, r1 -> -r1"

private:
    ImageMap images_;
};

/* (g after h)(x) = g(h(x)), signs multiplying. */
SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h);

/* Applies the linear substitution.  Every variable of p must be in g's
 * domain (DomainError). */
Polynomial apply_action(const SignedPermutation& g, const Polynomial& p);

/* Group-membership check: same domain throughout, closed under composition,
 * contains the identity and all inverses. */
bool is_group(const std::vector<SignedPermutation>& action);

/* (1/|G|) * sum of g.p over g in G.  Empty G is a DomainError. */
Polynomial reynolds_average(const std::vector<SignedPermutation>& action, const Polynomial& p);

/* Sum of g.p over g in G, without the 1/|G| factor.  Empty G is a DomainError. */
Polynomial transfer_sum(const std::vector<SignedPermutation>& action, const Polynomial& p);

/* m-th power sum of the given roots; m >= 1 (m == 0 is a DomainError). */
Polynomial power_sum(const std::vector<Polynomial>& roots, int m);

/* k-th elementary symmetric polynomial of the roots, 0 <= k <= roots.size(). */
Polynomial elementary_symmetric(const std::vector<Polynomial>& roots, int k);

struct SymmetricFunctions {
    Polynomial p;   // m-th power sum
    Polynomial e1;
    Polynomial e2;
    Polynomial e3;
};

/* Power sum plus the first three elementary symmetric polynomials of a list
 * of exactly three roots.  m == 0 is a DomainError. */
SymmetricFunctions symmetric_functions(const std::vector<Polynomial>& roots, int m);

}  // namespace chow
