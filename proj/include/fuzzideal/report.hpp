#pragma once

#include <string>

#include <json.hpp>

#include "fuzzideal/primeness.hpp"
#include "fuzzideal/radical.hpp"

namespace fuzzideal {

using Json = nlohmann::json;

// Report serialization. Object keys come out sorted, values are "p/q"
// strings and elements use the literal syntax of the ring.

Json to_json(const Ring& ring, const Witness& w);
Json to_json(const FuzzyIdeal& p, const ClassificationReport& report);
Json to_json(const RadicalReport& report);
Json to_json(const Ring& ring, const DiagramReport& report);
Json to_json(const FuzzyIdeal& p, const CharprimeReport& report);
Json to_json(const FuzzyIdeal& i, const FradCheck& check);
Json to_json(const FuzzyIdeal& p, const InterCheck& check);

/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);

}  // namespace fuzzideal
