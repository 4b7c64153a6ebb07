#include "chow/json_io.hpp"

namespace chow {

using nlohmann::json;

json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, coeff] : p.terms()) {
        json monomial = json::object();
        for (const auto& [name, exp] : m.factors()) monomial[name] = exp;
        terms.push_back(json{{"coeff", coeff.to_string()}, {"monomial", monomial}});
    }
    return json{{"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw DomainError("polynomial JSON: expected {\"terms\": [...]}");
    Polynomial out;
    for (const auto& term : j.at("terms")) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("monomial") ||
            !term.at("coeff").is_string() || !term.at("monomial").is_object())
            throw DomainError("polynomial JSON: term must be {\"coeff\": str, \"monomial\": obj}");
        Rational coeff = Rational::parse(term.at("coeff").get<std::string>());
        std::vector<std::pair<std::string, int>> factors;
        for (const auto& [name, exp] : term.at("monomial").items()) {
            if (!exp.is_number_integer() || exp.get<long>() <= 0 || exp.get<long>() > 1000000)
                throw DomainError("polynomial JSON: exponent of '" + name +
                                  "' must be a positive integer");
            factors.emplace_back(name, static_cast<int>(exp.get<long>()));
        }
        out += Polynomial::term(coeff, Monomial::from_factors(factors));
    }
    return out;
}

json tree_to_json(const DualTree& t) {
    json vertices = json::array();
    for (const auto& v : t.vertices) vertices.push_back(v);
    json edges = json::array();
    for (const auto& [a, b] : t.edges) edges.push_back(json::array({a, b}));
    json orientation = json::object();
    for (const auto& [v, pair] : t.orientation)
        orientation[v] = json::array({pair.first, pair.second});
    return json{{"vertices", vertices}, {"edges", edges}, {"orientation", orientation}};
}

DualTree tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
        !j.at("vertices").is_array() || !j.at("edges").is_array())
        throw DomainError("tree JSON: expected {\"vertices\": [...], \"edges\": [...]}");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw DomainError("tree JSON: vertex ids must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw DomainError("tree JSON: each edge must be a pair of vertex ids");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    std::map<std::string, std::pair<std::string, std::string>> orientation;
    if (j.contains("orientation")) {
        if (!j.at("orientation").is_object())
            throw DomainError("tree JSON: orientation must be an object");
        for (const auto& [v, pair] : j.at("orientation").items()) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
                !pair[1].is_string())
                throw DomainError("tree JSON: orientation entries must be vertex pairs");
            orientation[v] = {pair[0].get<std::string>(), pair[1].get<std::string>()};
        }
    }
    return make_tree(std::move(vertices), std::move(edges), std::move(orientation));
}

DualTree parse_tree_argument(const std::string& text) {
    if (is_tree_shorthand(text)) return tree_from_name(text);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw DomainError("tree argument: neither a known shorthand nor valid JSON: '" + text +
                          "'");
    return tree_from_json(j);
}

Polynomial parse_class_argument(const std::string& text) {
    if (!text.empty() && text.find('{') == std::string::npos) {
        try {
            return Polynomial(Rational::parse(text));
        } catch (const DomainError&) {
            throw DomainError(
                "class argument '" + text +
                "': expected a rational constant like \"-1/2\" or a polynomial as JSON like "
                R"({"terms": [{"coeff": "1", "monomial": {"t1": 1}}]})");
        }
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw DomainError("class argument: neither a rational constant nor valid JSON");
    return polynomial_from_json(j);
}

}  // namespace chow
