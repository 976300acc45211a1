#include "leonard/json_io.hpp"

#include "leonard/errors.hpp"

namespace leonard {

json to_json(const Rational& x) { return to_string(x); }

json to_json(const Vec& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

json to_json(const Mat& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw parse_error("expected a rational as a \"p/q\" string or an integer, got " + j.dump());
}

Vec vector_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("expected an array, got " + j.dump());
  Vec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = rational_from_json(j[i]);
  return v;
}

Mat matrix_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("expected an array of rows, got " + j.dump());
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  Mat m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw parse_error("ragged matrix row " + std::to_string(i));
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Index>(i), static_cast<Index>(k)) = rational_from_json(j[i][k]);
  }
  return m;
}

json to_json(const ParameterArray& p) {
  json out;
  out["d"] = p.d;
  out["theta"] = to_json(p.theta);
  out["theta_star"] = to_json(p.theta_star);
  out["varphi"] = to_json(p.varphi);
  out["phi"] = to_json(p.phi);
  return out;
}

namespace {

std::vector<Rational> sequence(const json& j, const char* key) {
  if (!j.contains(key)) throw parse_error(std::string("parameter array: missing \"") + key + "\"");
  const auto& a = j.at(key);
  if (!a.is_array()) throw parse_error(std::string("parameter array: \"") + key + "\" must be an array");
  std::vector<Rational> out;
  for (const auto& x : a) out.push_back(rational_from_json(x));
  return out;
}

}  // namespace

ParameterArray parameter_array_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("parameter array: expected a JSON object");
  if (!j.contains("d") || !j.at("d").is_number_integer()) throw parse_error("parameter array: \"d\" must be an integer");
  ParameterArray p;
  p.d = j.at("d").get<int>();
  p.theta = sequence(j, "theta");
  p.theta_star = sequence(j, "theta_star");
  p.varphi = sequence(j, "varphi");
  p.phi = sequence(j, "phi");
  return p;
}

json to_json(const FamilyParams& params) {
  json out;
  out["family"] = family_name(params);
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        out["d"] = c.d;
        if constexpr (std::is_same_v<T, DualHahnParams>) {
          out["h"] = to_json(c.h);
          out["r"] = to_json(c.r);
          out["s"] = to_json(c.s);
          out["s_star"] = to_json(c.s_star);
        } else if constexpr (std::is_same_v<T, KrawtchoukParams>) {
          out["r"] = to_json(c.r);
          out["s"] = to_json(c.s);
          out["s_star"] = to_json(c.s_star);
        } else {
          out["h"] = to_json(c.h);
          out["h_star"] = to_json(c.h_star);
          out["r1"] = to_json(c.r1);
          out["r2"] = to_json(c.r2);
          out["s"] = to_json(c.s);
          out["s_star"] = to_json(c.s_star);
          out["q"] = to_json(c.q);
        }
        out["theta0"] = to_json(c.theta0);
        out["theta0_star"] = to_json(c.theta0_star);
      },
      params);
  return out;
}

json realization_to_json(const Realization& r) {
  json out;
  out["A"] = to_json(r.A());
  out["A_star"] = to_json(r.A_star());
  out["E"] = json::array();
  out["E_star"] = json::array();
  for (int i = 0; i <= r.d(); ++i) {
    out["E"].push_back(to_json(r.E(i)));
    out["E_star"].push_back(to_json(r.E_star(i)));
  }
  out["gram"] = to_json(r.gram());
  out["v"] = to_json(r.v());
  out["v_star"] = to_json(r.v_star());
  out["v_star_down"] = to_json(r.v_star_down());
  return out;
}

json decimal_mirror(const json& j, int digits) {
  if (j.is_string()) {
    try {
      return to_decimal(parse_rational(j.get<std::string>()), digits);
    } catch (const parse_error&) {
      return j;
    }
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& x : j) out.push_back(decimal_mirror(x, digits));
    return out;
  }
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = decimal_mirror(it.value(), digits);
    return out;
  }
  return j;
}

}  // namespace leonard
