#pragma once

#include <json.hpp>

#include "faithful/construct.hpp"
#include "faithful/model.hpp"
#include "faithful/partition.hpp"
#include "faithful/search.hpp"
#include "faithful/verifier.hpp"

namespace faithful {

/// Insertion-ordered so that identical values print byte-identically.
using Json = nlohmann::ordered_json;

/// Integers are written as decimal strings.
Json to_json(const Integer& v);
/// Accepts a decimal string or a JSON integer. Throws PreconditionError.
Integer integer_from_json(const Json& j);

/// {"num": "...", "den": "..."}
Json to_json(const Rational& v);
Rational rational_from_json(const Json& j);

/// {"target": {...}, "terms": [{"num": ..., "den": ...}, ...]}
Json to_json(const Decomposition& d);
/// Parses the canonical shape; validation is left to the caller.
Decomposition decomposition_from_json(const Json& j);

Json to_json(const FaithfulnessReport& r);
Json to_json(const ConstructionTrace& t);
Json to_json(const LengthResult& r);
Json to_json(const SearchResult& r);
Json to_json(const Prop6Instance& inst);
Json to_json(const Prop6ScanResult& r);
Json to_json(const PartitionCheck& c);

}  // namespace faithful
