#pragma once

#include <json.hpp>
#include <string>

#include "vanprop/altchars.hpp"
#include "vanprop/character_table.hpp"
#include "vanprop/symchars.hpp"
#include "vanprop/vanishing.hpp"

namespace vanprop {

using Json = nlohmann::ordered_json;

Json to_json(const VanishingReport& rep);
VanishingReport vanishing_report_from_json(const Json& j);

Json to_json(const SymCharacterTable& t);
Json to_json(const AltCharacterTable& t);
Json to_json(const GroupCharacterTable& t);

Json to_json(const Theorem14Report& rep);
Theorem14Report theorem14_from_json(const Json& j);

/// {"q": "...", "c": "...", "t": +-1, "m": int} for surd values, "p/q" otherwise.
Json to_json(const AlgebraicValue& v);
AlgebraicValue algebraic_from_json(const Json& j);

std::string to_csv(const SymCharacterTable& t);
std::string to_csv(const AltCharacterTable& t);
std::string to_csv(const GroupCharacterTable& t);
std::string to_csv(const VanishingReport& rep);

}  // namespace vanprop
