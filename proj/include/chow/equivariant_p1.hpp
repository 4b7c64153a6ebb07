#pragma once

#include <string>
#include <vector>

#include "chow/polynomial.hpp"

namespace chow {

/* Torus-equivariant class on the projective line, stored by its two
 * fixed-point restrictions (univariate polynomials in the weight t).  A
 * pair comes from an actual class exactly when the two restrictions agree
 * modulo t (image condition), which makes the pushforward a polynomial. */
class EquivariantP1Class {
public:
    EquivariantP1Class() = default;  // zero class
    /* DomainError if either polynomial uses a variable other than t. */
    EquivariantP1Class(Polynomial at_zero, Polynomial at_infinity);

    const Polynomial& at_zero() const { return at_zero_; }
    const Polynomial& at_infinity() const { return at_infinity_; }

    bool satisfies_image_condition() const;

    EquivariantP1Class operator-() const;
    EquivariantP1Class operator+(const EquivariantP1Class& o) const;
    EquivariantP1Class operator-(const EquivariantP1Class& o) const;
    EquivariantP1Class operator*(const EquivariantP1Class& o) const;
    EquivariantP1Class pow(int n) const;

    bool operator==(const EquivariantP1Class& o) const {
        return at_zero_ == o.at_zero_ && at_infinity_ == o.at_infinity_;
    }
    bool operator!=(const EquivariantP1Class& o) const { return !(*this == o); }

private:
    Polynomial at_zero_;
    Polynomial at_infinity_;
};

/* The built-in classes: K = (t, -t) (the log-canonical-type class whose odd
 * powers push to -2t^even), the two fixed-point classes Q = (-t, 0) and
 * R = (0, t), and the unit (1, 1). */
EquivariantP1Class equivariant_K();
EquivariantP1Class equivariant_Q();
EquivariantP1Class equivariant_R();
EquivariantP1Class equivariant_one();

/* A scalar polynomial in t pulled back from the base: the pair (p, p). */
EquivariantP1Class lift(const Polynomial& p);

/* Pushforward to the base: (at_infinity - at_zero)/t, the localization
 * difference quotient, normalized so pushforward(Q) = pushforward(R) = 1.
 * LocalizationError when the image condition fails. */
Polynomial pushforward(const EquivariantP1Class& c);

/* Closed-form pushforward families checked exponent by exponent. */
struct PushforwardCheck {
    std::string family;
    int exponent = 0;
    Polynomial expected;
    Polynomial actual;
    bool ok = false;
};

/* Rows for K^e, (-K-R)^e, (-K-R-Q)^e, e = 0..max_exponent. */
std::vector<PushforwardCheck> pushforward_table(int max_exponent);

}  // namespace chow
