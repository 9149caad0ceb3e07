#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "spinlab/exterior.hpp"
#include "spinlab/multivector.hpp"

namespace spinlab {

using ExactElement = Multivector<GaussianRational>;

/// Exact parse of "p/q", integers, and decimals such as "-0.125" or "3e-2".
Rational parse_rational(const std::string& text);
inline Rational parse_rational(const char* text) { return parse_rational(std::string(text)); }
Rational parse_rational(const nlohmann::json& value);

/// {"sig": [r, s], "terms": [{"mask": m, "re": "p/q", "im": "p/q"}, ...]}; "im" is optional.
ExactElement multivector_from_json(const nlohmann::json& j, int max_dimension = kDefaultMaxDimension);

/// Same layout, masks ascending, both parts written as exact rational strings.
nlohmann::json to_json(const ExactElement& x);
nlohmann::json to_json(const ExteriorElement<GaussianRational>& w);

}  // namespace spinlab
