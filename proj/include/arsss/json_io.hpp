#pragma once

#include <string>

#include <json.hpp>

#include "arsss/prob.hpp"
#include "arsss/scheme.hpp"

namespace arsss {

using Json = nlohmann::ordered_json;

/// {"m": int, "q": int, "values": [...]}
Json to_json(const ProbVector& x);
ProbVector prob_vector_from_json(const Json& j);

/// {"m": int, "symbols": [ProbVector, ...]}. A bare array of ProbVector
/// objects is accepted on input.
Json to_json(const ProbSequence& xs);
ProbSequence prob_sequence_from_json(const Json& j);

/// {"generator_fingerprint", "m", "q", "L", "k", "block", "indices",
///  "synthesis_ops", "shares", "negatives"?}
Json to_json(const SharesBundle& bundle);
SharesBundle bundle_from_json(const Json& j);

/// Parses text, mapping syntax and schema errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace arsss
