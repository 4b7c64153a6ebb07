#include "chow/rational.hpp"

#include <cctype>
#include <ostream>

namespace chow {

Rational::Rational(long n, long d) {
    if (d == 0) throw DomainError("rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool valid_integer_text(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_integer_text(num) || !valid_integer_text(den))
        throw DomainError("rational: cannot parse '" + text + "'");
    mpq_class v;
    if (v.set_str(num + "/" + den, 10) != 0)
        throw DomainError("rational: cannot parse '" + text + "'");
    if (v.get_den() == 0) throw DomainError("rational: zero denominator in '" + text + "'");
    v.canonicalize();
    return Rational(v);
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace chow
