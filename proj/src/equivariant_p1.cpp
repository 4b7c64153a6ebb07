#include "chow/equivariant_p1.hpp"

namespace chow {

namespace {

const std::string kWeight = "t";

void check_univariate(const Polynomial& p) {
    for (const auto& var : p.variables())
        if (var != kWeight)
            throw DomainError("equivariant class: restriction must be univariate in t, got '" +
                              var + "'");
}

Polynomial t_power(int e) {
    return Polynomial::term(Rational(1), Monomial::variable(kWeight, e));
}

}  // namespace

EquivariantP1Class::EquivariantP1Class(Polynomial at_zero, Polynomial at_infinity)
    : at_zero_(std::move(at_zero)), at_infinity_(std::move(at_infinity)) {
    check_univariate(at_zero_);
    check_univariate(at_infinity_);
}

bool EquivariantP1Class::satisfies_image_condition() const {
    return (at_zero_ - at_infinity_).constant_term().is_zero();
}

EquivariantP1Class EquivariantP1Class::operator-() const {
    return {-at_zero_, -at_infinity_};
}

EquivariantP1Class EquivariantP1Class::operator+(const EquivariantP1Class& o) const {
    return {at_zero_ + o.at_zero_, at_infinity_ + o.at_infinity_};
}

EquivariantP1Class EquivariantP1Class::operator-(const EquivariantP1Class& o) const {
    return {at_zero_ - o.at_zero_, at_infinity_ - o.at_infinity_};
}

EquivariantP1Class EquivariantP1Class::operator*(const EquivariantP1Class& o) const {
    return {at_zero_ * o.at_zero_, at_infinity_ * o.at_infinity_};
}

EquivariantP1Class EquivariantP1Class::pow(int n) const {
    return {at_zero_.pow(n), at_infinity_.pow(n)};
}

EquivariantP1Class equivariant_K() { return {t_power(1), -t_power(1)}; }
EquivariantP1Class equivariant_Q() { return {-t_power(1), Polynomial()}; }
EquivariantP1Class equivariant_R() { return {Polynomial(), t_power(1)}; }
EquivariantP1Class equivariant_one() { return {Polynomial(1), Polynomial(1)}; }

EquivariantP1Class lift(const Polynomial& p) { return {p, p}; }

Polynomial pushforward(const EquivariantP1Class& c) {
    if (!c.satisfies_image_condition())
        throw LocalizationError("pushforward: fixed-point restrictions differ modulo t");
    Polynomial diff = c.at_infinity() - c.at_zero();
    Polynomial::TermMap shifted;
    for (const auto& [m, coeff] : diff.terms()) {
        int e = m.exponent_of(kWeight);
        if (e == 0)
            throw InternalError("pushforward: nonzero constant term after image check");
        shifted.emplace(Monomial::variable(kWeight, e - 1), coeff);
    }
    return Polynomial(std::move(shifted));
}

std::vector<PushforwardCheck> pushforward_table(int max_exponent) {
    if (max_exponent < 0) throw DomainError("pushforward_table: negative exponent");
    std::vector<PushforwardCheck> out;
    const EquivariantP1Class K = equivariant_K();
    const EquivariantP1Class mKR = -K - equivariant_R();
    const EquivariantP1Class mKRQ = mKR - equivariant_Q();

    auto add = [&out](const std::string& family, int e, const Polynomial& expected,
                      const Polynomial& actual) {
        out.push_back({family, e, expected, actual, expected == actual});
    };

    for (int e = 0; e <= max_exponent; ++e) {
        Polynomial k_expected =
            (e % 2 == 0) ? Polynomial() : Polynomial(Rational(-2)) * t_power(e - 1);
        add("K^e", e, k_expected, pushforward(K.pow(e)));

        Polynomial mkr_expected;
        if (e >= 1) mkr_expected = (e % 2 == 0) ? -t_power(e - 1) : t_power(e - 1);
        add("(-K-R)^e", e, mkr_expected, pushforward(mKR.pow(e)));

        add("(-K-R-Q)^e", e, Polynomial(), pushforward(mKRQ.pow(e)));
    }
    return out;
}

}  // namespace chow
