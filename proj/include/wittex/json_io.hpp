#pragma once

#include <json.hpp>

#include "wittex/cocycle.hpp"

namespace wittex {

// Interchange format for structure-constant functions, one record per
// function.  Keys in fixed order: alpha, beta, gamma (scalar strings), kind,
// then the kind's data fields:
//   kind "poly":     poly     polynomial in k, m
//   kind "delta_km": f        polynomial in k, the mass at k+m = 0
//   kind "delta_m0": f        polynomial in k, the mass at m = 0
//   kind "inv_m":    mu       polynomial in k, m; the value is mu(k,m)/m
//                    at_zero  polynomial in k, the value at m = 0
// A function whose components do not fit one of these shapes (a 1/(m+k)
// component, or a k+m = 0 mass mixed with anything else) raises
// SerializationError.  Polynomial + m = 0 mass combinations serialize as
// "inv_m" with mu divisible by m.
nlohmann::ordered_json cocycle_to_json(const Cocycle& c);

// Inverse of cocycle_to_json; ParseError on missing fields, malformed
// polynomial text, or stray variables.  Records are not required to satisfy
// the extension identity - validity is the verifier's job.
Cocycle cocycle_from_json(const nlohmann::ordered_json& j);

}  // namespace wittex
