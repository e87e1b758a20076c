#pragma once

#include "json.hpp"
#include "kbal/factored.hpp"
#include "kbal/rational_sum.hpp"
#include "kbal/weight_character.hpp"

namespace kbal {

using Json = nlohmann::ordered_json;

// Exponent maps use variable names as keys and doubled exponents as values.
Json exponents_to_json(const Exponents& e);
Exponents exponents_from_json(const Json& j, const Alphabet& alphabet);

Json to_json(const Monomial& m);
Json to_json(const WeightCharacter& w);
Json to_json(const FactoredRational& f);
Json to_json(const ExpandedRational& e);

Monomial monomial_from_json(const Json& j, const Alphabet& alphabet);
WeightCharacter weight_character_from_json(const Json& j, const Alphabet& alphabet);
FactoredRational factored_from_json(const Json& j, const Alphabet& alphabet);

}  // namespace kbal
