#pragma once

// JSON schemas for contexts, classes, point configurations and polynomials.
// Integers beyond 53 bits and all rationals travel as decimal strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "coxforge/lattice.hpp"
#include "coxforge/poly.hpp"
#include "coxforge/sections.hpp"

namespace coxforge {

using Json = nlohmann::json;

Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"a","b","c"}; a = 2 contexts also carry the {"n","r"} envelope.
Json context_to_json(const LatticeContext& ctx);
LatticeContext context_from_json(const Json& j);

/// {"ctx":{...},"h":[...],"m":[...]}; "d" may replace "h" for a = 2 and
/// {"n","r"} may replace "ctx".
Json divisor_to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const Json& j);

Json divisors_to_json(const std::vector<DivisorClass>& ds);

/// {"ctx":{...},"l":[...],"e":[...]}.
Json curve_to_json(const CurveClass& g);
CurveClass curve_from_json(const Json& j);

/// {"n","r","params":["p/q",...]}.
Json point_config_to_json(const PointConfig& cfg);
PointConfig point_config_from_json(const Json& j);

/// Term list in graded-lex descending order: [{"coef":"p/q","exps":{"z0":2,...}}];
/// zero exponents are omitted.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, const std::vector<std::string>& vars);

}  // namespace coxforge
