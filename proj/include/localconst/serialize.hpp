#pragma once

#include <json.hpp>

#include "localconst/characters.hpp"
#include "localconst/cyclotomic.hpp"
#include "localconst/epsilon.hpp"
#include "localconst/verify.hpp"

namespace localconst {

using nlohmann::json;

// Integers that fit in 64 bits are written as JSON numbers, larger ones as strings.
json to_json(const CyclotomicNumber& x);
json to_json(const RootOfUnity& r);
json to_json(const EpsilonValue& e);
json to_json(const Report& r);
json character_json(const MultiplicativeCharacter& chi);

CyclotomicNumber cyclotomic_from_json(const json& j);
RootOfUnity root_from_json(const json& j);
EpsilonValue epsilon_from_json(const json& j);

/// Root-of-unity form when available, otherwise the power-basis expression.
std::string display(const EpsilonValue& e);

}  // namespace localconst
