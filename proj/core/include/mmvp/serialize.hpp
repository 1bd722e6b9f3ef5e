#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mmvp/closed_form.hpp"
#include "mmvp/vop.hpp"
#include "mmvp/wavefield.hpp"

namespace mmvp {

using Json = nlohmann::ordered_json;

/// Throws ParseError if `j` is not an object or has a key outside `allowed`.
void require_keys(const Json& j, std::initializer_list<std::string_view> allowed, std::string_view where);

/// Accepts "n/d" or decimal strings, integers, and JSON floats (read through
/// their shortest decimal text, so 0.3 becomes exactly 3/10).
Rational rational_from_json(const Json& j);
double real_from_json(const Json& j);

/// {"context": {"s_num", "s_den"}, "terms": [{"m", "n", "p_num", "p_den", "q_num", "q_den"}]}
/// with integers as decimal strings and terms ordered by (n, m).
Json to_json(const ExpPoly& f);
ExpPoly exp_poly_from_json(const Json& j);

Json to_json(const SeriesSolution& s);
SeriesSolution series_from_json(const Json& j);

Json to_json(const GeneralTerm& gt);

Json to_json(const ClosedForm& cf);
/// {"family": "SN2", "a1": ..., ...}; keys not used by the family are optional.
ClosedForm closed_form_from_json(const Json& j);

Json to_json(const FunctionSpec& f);
/// List of {"kind": "cos"|"sech"|"power"|"constant"|"chirp_cos", ...}.
FunctionSpec function_spec_from_json(const Json& j);

Json to_json(const GridSpec& g);
GridSpec grid_from_json(const Json& j, GridSpec defaults = {});

Json to_json(const FieldConfig& cfg);
FieldConfig field_config_from_json(const Json& j);

}  // namespace mmvp
