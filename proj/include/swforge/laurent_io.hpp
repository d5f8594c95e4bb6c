#ifndef SWFORGE_LAURENT_IO_HPP
#define SWFORGE_LAURENT_IO_HPP

#include <string_view>

#include <nlohmann/json.hpp>

#include "swforge/laurent.hpp"

namespace swforge {

// {"vars": [...], "terms": [{"c": "<integer>", "e2": [...]}, ...]}
// Terms appear in canonical (lexicographic, ascending) order.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

// Parses the text form produced by to_string, e.g. "t^2 - 1 + t^-2",
// "3*t1^(1/2)*t2^(-1/2)". Variables listed in `vars` are always included,
// so "1" over {"t"} is the constant 1 in t.
LaurentPoly parse_poly(std::string_view text, const VarSet& vars = {});

// Accepts either a JSON object (string starting with '{') or the text form.
LaurentPoly poly_from_string(std::string_view text, const VarSet& vars = {});

}  // namespace swforge

#endif  // SWFORGE_LAURENT_IO_HPP
