#pragma once

#include <string>

#include <json.hpp>

#include "solitonlab/symbolic/trig_poly.hpp"

namespace solitonlab::sym {

/// {"n": {"cos": "<canonical>", "sin": "<canonical>"}, ...}, degrees ascending.
nlohmann::ordered_json to_json(const TrigPoly& p);

/// Single-degree form {"n": {...}} even when the degree is absent (both parts "0").
nlohmann::ordered_json degree_to_json(const TrigPoly& p, unsigned n);

/// Inverse of to_json; throws InvalidInput / ParseError on malformed records.
TrigPoly trig_poly_from_json(const nlohmann::json& j);

}  // namespace solitonlab::sym
