#pragma once

#include <json.hpp>

#include "chow/dual_tree.hpp"
#include "chow/polynomial.hpp"

namespace chow {

/* {"terms":[{"coeff":"num/den","monomial":{"t1":2,"r1":1}}]}; terms are
 * serialized leading-term first; an empty list is the zero polynomial. */
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);  // DomainError when malformed

/* {"vertices":["a","b"],"edges":[["a","b"]],"orientation":{"b":["a","c"]}};
 * missing orientations are filled with the canonical default. */
nlohmann::json tree_to_json(const DualTree& t);
DualTree tree_from_json(const nlohmann::json& j);  // DomainError when malformed

/* A tree given either by shorthand name or by inline JSON. */
DualTree parse_tree_argument(const std::string& text);

/* A class given either as a rational constant ("1", "-2/3") or as inline
 * polynomial JSON. */
Polynomial parse_class_argument(const std::string& text);

}  // namespace chow
