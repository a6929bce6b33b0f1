#pragma once

#include <json.hpp>

#include "knots.hpp"
#include "symfunc.hpp"

namespace qtk::io {

using nlohmann::json;

// {"vars": [...], "terms": [{"coeff": "-3", "powers": [...]}, ...]}
json to_json(const IntPoly& p);
IntPoly intpoly_from_json(const json& j);

// A JsonPoly when the value is a polynomial, else {"num": ..., "den": ...}.
json to_json(const RatFunc& r);
RatFunc ratfunc_from_json(const json& j);

// {"schur_x": [{"lambda": [3,1], "coeff": ...}, ...]}
json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const json& j);

json to_json(const SchurQT& x);  // [{"a":..,"b":..,"mult":..}, ...]

// JsonPoly in q, t, A plus "schur_qt": one list per A-power (null where the
// coefficient is not q,t-symmetric).
json to_json(const knots::SuperPoly& p);
knots::SuperPoly superpoly_from_json(const json& j);

}  // namespace qtk::io
