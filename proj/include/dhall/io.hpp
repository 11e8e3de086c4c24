#pragma once

#include <string>

#include <json.hpp>

#include "dhall/bridgeland.hpp"

namespace dhall {

using nlohmann::json;

json to_json(const Rep& x);
/// {"dims": [...], "maps": [matrix per arrow, rows]}; "maps" may be omitted for zero maps.
Rep rep_from_json(const Session& s, const json& j);

json to_json(const RepKey& k);
/// Accepts {"dims", "code"} or a representation.
RepKey rep_key_from_json(const Session& s, const json& j);

json to_json(const ComplexKey& k);
ComplexKey complex_key_from_json(const Session& s, const json& j);

json to_json(const KClass& c);
KClass kclass_from_json(const json& j);

/// {"rat": "p/q", "sqrt": "p/q"} for rat + sqrt * t
json to_json(const Coeff& c);
Coeff coeff_from_json(const json& j, int q);

json to_json(const HallElement& x);
json to_json(const HallTensor& x);
json to_json(const ExtElement& x);
json to_json(const ComplexElement& x);
json to_json(const ComplexTensor& x);
json key_fields(const DHKey& k);
json to_json(const DHElement& x);
json to_json(const DHTensor& x);
DHElement dh_element_from_json(const Session& s, const json& j);

/// Parses "1,2,0" into a class.
KClass parse_dims(const std::string& text);

}  // namespace dhall
