#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "lr/polyfit.hpp"
#include "lr/polynomial.hpp"
#include "lr/stretch.hpp"
#include "lr/tableau.hpp"

namespace lr {

using nlohmann::json;

// JSON encodings used by the CLI.  Counts and coefficients are decimal
// strings so arbitrary-precision values survive any JSON parser.
json to_json(const LRTableau& t);
json to_json(const CharacterExpansion& e);
json to_json(const StabilizationReport& r);
json to_json(const RationalPolynomial& p);
json to_json(const GeneratingFunction& g);
json sequence_json(const std::vector<std::pair<Int, Int>>& values);

std::string tableau_text(const LRTableau& t);

}  // namespace lr
