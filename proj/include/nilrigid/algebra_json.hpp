#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "nilrigid/algebra.hpp"

namespace nilrigid {

// std::map-backed objects, so keys always serialize sorted.
using Json = nlohmann::json;

Json to_json(const Rat& q);
Json to_json(std::span<const Rat> v);
Json to_json(const QMat& m);

Rat rat_from_json(const Json& j, const std::string& where);
QVec vec_from_json(const Json& j, const std::string& where);
QMat mat_from_json(const Json& j, const std::string& where);

/// Canonical algebra document:
///   {"n": 4, "m": 3, "brackets": [{"i": 1, "j": 2, "z": ["1","0","0"]}, ...],
///    "metric": {"V": [[...]], "Z": [[...]]}}
/// with 1-based indices and rationals as strings; "metric" is optional.
Json algebra_to_json(const Graded2Step& a, const Metric* metric = nullptr);

struct ParsedAlgebra {
  Graded2Step algebra;
  std::optional<Metric> metric;
};

/// Validates the schema; errors name the offending field.
ParsedAlgebra algebra_from_json(const Json& doc);

}  // namespace nilrigid
