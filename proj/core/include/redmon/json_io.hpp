#pragma once

#include <nlohmann/json.hpp>

#include "redmon/coordring.hpp"
#include "redmon/matrix.hpp"
#include "redmon/monoid.hpp"
#include "redmon/repdim.hpp"
#include "redmon/weights.hpp"

// JSON encodings shared by the CLI and by anything consuming its output.
//
//   Matrix:      {"rows": r, "cols": c, "field": "q" | "fp:<p>",
//                 "entries": [["num","den"], ...]}   (row-major; fp entries
//                 are bare integers; "field" defaults to "q")
//   Weight:      {"type": "A"|"C", "a": [...], "k": int}   (k for C only)
//   OrbitClass:  {"class": "unit", "component": 1} | {"class": "singular", "rank": r}
namespace redmon::json {

using nlohmann::json;

json to_json(const Scalar& s);
json to_json(const Matrix& m);
json to_json(const Weight& w);
json to_json(const MonoidSpec& spec);
json to_json(const OrbitClass& c);
json to_json(const Multiplicities& mult);
json to_json(const DimTable& table);
json to_json(const HwcReport& report);

// Scalars are written as strings; integers are accepted too.
Scalar scalar_from_json(const json& j, Field field);
Matrix matrix_from_json(const json& j);
Weight weight_from_json(const json& j);
MonoidSpec spec_from_json(const json& j);
OrbitClass orbit_from_json(const json& j);
Multiplicities multiplicities_from_json(const json& j);

// Parses text, raising DomainError (not a parser exception) on bad input.
json parse(const std::string& text);

}  // namespace redmon::json
