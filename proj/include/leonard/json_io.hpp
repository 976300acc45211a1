#pragma once

#include "json.hpp"

#include "leonard/families.hpp"
#include "leonard/realization.hpp"

namespace leonard {

using json = nlohmann::ordered_json;

json to_json(const Rational& x);
json to_json(const Vec& v);
/// Row-major array of rows.
json to_json(const Mat& m);
json to_json(const std::vector<Rational>& v);

/// Accepts "p/q" strings and JSON integers. Throws parse_error otherwise.
Rational rational_from_json(const json& j);
Vec vector_from_json(const json& j);
Mat matrix_from_json(const json& j);

/// {"d", "theta", "theta_star", "varphi", "phi"}
json to_json(const ParameterArray& p);
/// Unknown keys are ignored. Throws parse_error on missing or malformed fields.
ParameterArray parameter_array_from_json(const json& j);

/// Family name and raw parameters.
json to_json(const FamilyParams& params);

/// {"A", "A_star", "E": [...], "E_star": [...], "gram", "v", "v_star", "v_star_down"}
json realization_to_json(const Realization& r);

/// Copy of `j` with every string that reads as a rational replaced by a
/// decimal rendering with `digits` digits after the point.
json decimal_mirror(const json& j, int digits);

}  // namespace leonard
