#pragma once

#include <json.hpp>

#include <string>

#include "nonarch/ball.hpp"
#include "nonarch/contract.hpp"

namespace nonarch {

using Json = nlohmann::json;

// Canonical pair form ["a/b","c/d"] for a + c/d*sqrt2 values.
Json quadext_to_json(const QuadExt& x);
QuadExt quadext_from_json(const Json& j);

Json level_to_json(const Level& l);  // pair form, or the string "inf"

// Coefficient forms: "0"/"1" (F2), "0".."2" (F3), "a/b" (Q),
// ["a/b","c/d"] (Qi re/im).
Json coeff_to_json(const Coeff& c);
Coeff coeff_from_json(FieldTag tag, const Json& j);

// {"field": "F2"|"F3"|"Q"|"Qi", "terms": [{"e": pair, "c": coeff}, ...]},
// terms ascending by exponent. Round-trips bit-exactly.
Json series_to_json(const Series& s);
Series series_from_json(const Json& j);

// {"family": <id>, "data": [<series>, ...]}.
Json element_to_json(const std::string& family, const Element& e);
Element element_from_json(const Json& j, std::string* family_out = nullptr);

// {"center": <element>, "level": pair, "kind": "open"|"closed"}.
Json ball_to_json(const std::string& family, const Ball& b);
Ball ball_from_json(const OmegaGroup& g, const Json& j);

}  // namespace nonarch
