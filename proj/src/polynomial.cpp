#include "chow/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace chow {

namespace {

/* Returns the numeric index when name is <prefix><digits>, else -1. */
long indexed_name(const std::string& name, char prefix) {
    if (name.size() < 2 || name[0] != prefix) return -1;
    long idx = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
        idx = idx * 10 + (name[i] - '0');
        if (idx > 1000000) return -1;
    }
    return idx;
}

}  // namespace

int variable_class(const std::string& name) {
    if (indexed_name(name, 't') >= 0) return 0;
    if (indexed_name(name, 'r') >= 0) return 1;
    return 2;
}

bool variable_less(const std::string& a, const std::string& b) {
    int ca = variable_class(a), cb = variable_class(b);
    if (ca != cb) return ca < cb;
    if (ca == 0) return indexed_name(a, 't') < indexed_name(b, 't');
    if (ca == 1) return indexed_name(a, 'r') < indexed_name(b, 'r');
    return a < b;
}

bool valid_variable_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

Monomial Monomial::variable(const std::string& name, int exponent) {
    return from_factors({{name, exponent}});
}

Monomial Monomial::from_factors(const std::vector<std::pair<std::string, int>>& factors) {
    std::map<std::string, int, VariableLess> merged;
    for (const auto& [name, exp] : factors) {
        if (!valid_variable_name(name))
            throw DomainError("monomial: invalid variable name '" + name + "'");
        if (exp < 0)
            throw DomainError("monomial: negative exponent for '" + name + "'");
        merged[name] += exp;
    }
    Monomial m;
    for (const auto& [name, exp] : merged)
        if (exp != 0) m.factors_.emplace_back(name, exp);
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [name, exp] : factors_) d += exp;
    return d;
}

int Monomial::exponent_of(const std::string& name) const {
    for (const auto& [n, exp] : factors_)
        if (n == name) return exp;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + o.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < o.factors_.size()) {
        const auto& a = factors_[i];
        const auto& b = o.factors_[j];
        if (a.first == b.first) {
            out.factors_.emplace_back(a.first, a.second + b.second);
            ++i, ++j;
        } else if (variable_less(a.first, b.first)) {
            out.factors_.push_back(a), ++i;
        } else {
            out.factors_.push_back(b), ++j;
        }
    }
    for (; i < factors_.size(); ++i) out.factors_.push_back(factors_[i]);
    for (; j < o.factors_.size(); ++j) out.factors_.push_back(o.factors_[j]);
    return out;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, exp] : factors_) {
        if (!first) os << "*";
        first = false;
        os << name;
        if (exp != 1) os << "^" << exp;
    }
    return os.str();
}

int compare_monomials(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first == fb[j].first) {
            if (fa[i].second != fb[j].second)
                return fa[i].second < fb[j].second ? -1 : 1;
            ++i, ++j;
        } else if (variable_less(fa[i].first, fb[j].first)) {
            return 1;  // a has positive power on an earlier variable
        } else {
            return -1;
        }
    }
    if (i < fa.size()) return 1;
    if (j < fb.size()) return -1;
    return 0;
}

bool MonomialOrderDesc::operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b) > 0;
}

namespace {

int initial_degree_bound() {
    if (const char* env = std::getenv("CHOW_STRATA_DEGREE_BOUND")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= 1000000) return static_cast<int>(v);
    }
    return 64;
}

int& degree_bound_ref() {
    static int bound = initial_degree_bound();
    return bound;
}

}  // namespace

int degree_bound() { return degree_bound_ref(); }

void set_degree_bound(int bound) {
    if (bound <= 0) throw DomainError("degree bound must be positive");
    degree_bound_ref() = bound;
}

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial::unit(), c);
}

Polynomial::Polynomial(TermMap terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::variable(const std::string& name) {
    return term(Rational(1), Monomial::variable(name));
}

Polynomial Polynomial::term(const Rational& coeff, const Monomial& m) {
    Polynomial p;
    if (!coeff.is_zero()) p.terms_.emplace(m, coeff);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::coefficient_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total_degree();  // leading term has maximal degree
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

std::set<std::string, VariableLess> Polynomial::variables() const {
    std::set<std::string, VariableLess> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [name, exp] : m.factors()) out.insert(name);
    return out;
}

void Polynomial::insert_term(const Monomial& m, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
        terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) insert_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) insert_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    const int bound = degree_bound();
    Polynomial out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            if (ma.total_degree() + mb.total_degree() > bound)
                throw DegreeBoundError("polynomial product exceeds degree bound " +
                                       std::to_string(bound));
            out.insert_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c.is_zero()) return Polynomial();
    Polynomial out = *this;
    for (auto& [m, coeff] : out.terms_) coeff *= c;
    return out;
}

Polynomial Polynomial::pow(int n) const {
    if (n < 0) throw DomainError("polynomial: negative exponent");
    const int d = total_degree();
    if (d > 0 && static_cast<long>(d) * n > degree_bound())
        throw DegreeBoundError("polynomial power " + std::to_string(n) +
                               " exceeds degree bound " + std::to_string(degree_bound()));
    Polynomial result(Rational(1));
    Polynomial base = *this;
    int e = n;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial term_value(c);
        for (const auto& [name, exp] : m.factors()) {
            auto it = images.find(name);
            if (it == images.end())
                throw DomainError("substitute: no image for variable '" + name + "'");
            term_value = term_value * it->second.pow(exp);
        }
        out += term_value;
    }
    return out;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.total_degree() == degree) out.insert_term(m, c);
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            a = a.abs();
        }
        first = false;
        if (m.is_unit()) {
            os << a.to_string();
        } else if (a.is_one()) {
            os << m.to_string();
        } else {
            os << a.to_string() << "*" << m.to_string();
        }
    }
    return os.str();
}

SignedPermutation::SignedPermutation(ImageMap images) : images_(std::move(images)) {
    for (const auto& [var, image] : images_) {
        if (image.second != 1 && image.second != -1)
            throw DomainError("signed permutation: sign must be +1 or -1");
        if (!valid_variable_name(var) || !valid_variable_name(image.first))
            throw DomainError("signed permutation: invalid variable name");
    }
}

SignedPermutation SignedPermutation::identity(const std::vector<std::string>& variables) {
    SignedPermutation g;
    for (const auto& v : variables) g.set_image(v, v, 1);
    return g;
}

void SignedPermutation::set_image(const std::string& var, const std::string& image, int sign) {
    if (sign != 1 && sign != -1)
        throw DomainError("signed permutation: sign must be +1 or -1");
    if (!valid_variable_name(var) || !valid_variable_name(image))
        throw DomainError("signed permutation: invalid variable name");
    images_[var] = {image, sign};
}

bool SignedPermutation::is_valid() const {
    std::set<std::string> domain, range;
    for (const auto& [var, image] : images_) {
        domain.insert(var);
        range.insert(image.first);
    }
    return domain == range && range.size() == images_.size();
}

SignedPermutation SignedPermutation::inverse() const {
    if (!is_valid()) throw DomainError("signed permutation: not a bijection");
    SignedPermutation inv;
    for (const auto& [var, image] : images_) inv.set_image(image.first, var, image.second);
    return inv;
}

bool SignedPermutation::is_identity() const {
    for (const auto& [var, image] : images_)
        if (image.first != var || image.second != 1) return false;
    return true;
}

std::string SignedPermutation::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [var, image] : images_) {
        if (!first) os << ", ";
        first = false;
        os << var << " -> " << (image.second < 0 ? "-" : "") << image.first;
    }
    return os.str();
}

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h) {
    SignedPermutation out;
    for (const auto& [var, image] : h.images()) {
        auto it = g.images().find(image.first);
        if (it == g.images().end())
            throw DomainError("compose: variable '" + image.first + "' missing from outer map");
        out.set_image(var, it->second.first, image.second * it->second.second);
    }
    return out;
}

Polynomial apply_action(const SignedPermutation& g, const Polynomial& p) {
    Polynomial::TermMap out;
    for (const auto& [m, c] : p.terms()) {
        Rational coeff = c;
        std::vector<std::pair<std::string, int>> mapped;
        mapped.reserve(m.factors().size());
        for (const auto& [name, exp] : m.factors()) {
            auto it = g.images().find(name);
            if (it == g.images().end())
                throw DomainError("apply_action: variable '" + name +
                                  "' missing from the permutation");
            mapped.emplace_back(it->second.first, exp);
            if (it->second.second < 0 && (exp % 2) != 0) coeff = -coeff;
        }
        Monomial image = Monomial::from_factors(mapped);
        auto [it, inserted] = out.try_emplace(image, coeff);
        if (!inserted) it->second += coeff;
    }
    return Polynomial(std::move(out));
}

bool is_group(const std::vector<SignedPermutation>& action) {
    if (action.empty()) return false;
    std::set<std::string> domain;
    for (const auto& [var, image] : action.front().images()) domain.insert(var);
    auto contains = [&](const SignedPermutation& g) {
        return std::find(action.begin(), action.end(), g) != action.end();
    };
    for (const auto& g : action) {
        if (!g.is_valid()) return false;
        std::set<std::string> d;
        for (const auto& [var, image] : g.images()) d.insert(var);
        if (d != domain) return false;
    }
    /* no duplicate elements */
    for (std::size_t i = 0; i < action.size(); ++i)
        for (std::size_t j = i + 1; j < action.size(); ++j)
            if (action[i] == action[j]) return false;
    bool has_identity = false;
    for (const auto& g : action) has_identity = has_identity || g.is_identity();
    if (!has_identity) return false;
    for (const auto& g : action) {
        if (!contains(g.inverse())) return false;
        for (const auto& h : action)
            if (!contains(compose(g, h))) return false;
    }
    return true;
}

Polynomial reynolds_average(const std::vector<SignedPermutation>& action, const Polynomial& p) {
    if (action.empty()) throw DomainError("reynolds_average: empty group");
    return transfer_sum(action, p) * Rational(1, static_cast<long>(action.size()));
}

Polynomial transfer_sum(const std::vector<SignedPermutation>& action, const Polynomial& p) {
    if (action.empty()) throw DomainError("transfer_sum: empty group");
    Polynomial out;
    for (const auto& g : action) out += apply_action(g, p);
    return out;
}

Polynomial power_sum(const std::vector<Polynomial>& roots, int m) {
    if (m <= 0) throw DomainError("power_sum: exponent must be >= 1");
    Polynomial out;
    for (const auto& r : roots) out += r.pow(m);
    return out;
}

Polynomial elementary_symmetric(const std::vector<Polynomial>& roots, int k) {
    const int n = static_cast<int>(roots.size());
    if (k < 0 || k > n)
        throw DomainError("elementary_symmetric: index out of range");
    std::vector<Polynomial> e(static_cast<std::size_t>(k) + 1);
    e[0] = Polynomial(Rational(1));
    int used = 0;
    for (const auto& r : roots) {
        ++used;
        for (int j = std::min(k, used); j >= 1; --j) e[j] += e[j - 1] * r;
    }
    return e[k];
}

SymmetricFunctions symmetric_functions(const std::vector<Polynomial>& roots, int m) {
    if (roots.size() != 3)
        throw DomainError("symmetric_functions: exactly three roots expected");
    SymmetricFunctions out;
    out.p = power_sum(roots, m);
    out.e1 = elementary_symmetric(roots, 1);
    out.e2 = elementary_symmetric(roots, 2);
    out.e3 = elementary_symmetric(roots, 3);
    return out;
}

}  // namespace chow
