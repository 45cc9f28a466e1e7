#include "umbral/cli/spec_io.hpp"

#include <umbral/error.hpp>

namespace umbral::cli {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::schema_error, path + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing field \"" + key + "\"");
  return *it;
}

std::size_t parse_count(const json& v, const std::string& path, std::size_t min) {
  if (!v.is_number_integer()) schema_error(path, "expected an integer");
  const auto raw = v.get<long long>();
  if (raw < static_cast<long long>(min)) schema_error(path, "must be at least " + std::to_string(min));
  return static_cast<std::size_t>(raw);
}

Rational parse_value(const json& v, const std::string& path) {
  if (!v.is_string()) schema_error(path, "expected a rational string such as \"3/4\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::rational_parse_error, path + ": " + e.what());
  }
}

std::vector<Rational> parse_values(const json& v, const std::string& path) {
  if (!v.is_array()) schema_error(path, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_value(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

PolyCoeff parse_poly(const json& v, const std::string& path) {
  if (!v.is_array()) schema_error(path, "expected an array of [power, \"coeff\"] pairs");
  std::vector<Monomial> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    const json& pair = v[i];
    if (!pair.is_array() || pair.size() != 2) schema_error(at, "expected [power, \"coeff\"]");
    terms.push_back({parse_count(pair[0], at + "[0]", 0), parse_value(pair[1], at + "[1]")});
  }
  return PolyCoeff(std::move(terms));
}

std::vector<PolyCoeff> parse_polys(const json& v, const std::string& path, std::size_t expected) {
  if (!v.is_array()) schema_error(path, "expected an array of coefficients");
  if (v.size() != expected) {
    schema_error(path, "expected " + std::to_string(expected) + " coefficients, got " + std::to_string(v.size()));
  }
  std::vector<PolyCoeff> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_poly(v[i], path + "[" + std::to_string(i) + "]"));
  if (out.back().is_zero()) schema_error(path + "[" + std::to_string(expected - 1) + "]", "leading coefficient is zero");
  return out;
}

nlohmann::ordered_json poly_json(const PolyCoeff& p) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) out.push_back({t.power, to_string(t.coeff)});
  return out;
}

nlohmann::ordered_json values_json(const std::vector<Rational>& values) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

SpecDocument parse_spec(const json& doc) {
  if (!doc.is_object()) schema_error("$", "expected an object");
  const json& type = field(doc, "type", "$");
  if (!type.is_string()) schema_error("$.type", "expected a string");
  const std::string kind = type.get<std::string>();

  SpecDocument out;
  if (kind == "linear") {
    LinearOde eq;
    eq.order = parse_count(field(doc, "order", "$"), "$.order", 1);
    eq.coeffs = parse_polys(field(doc, "coeffs", "$"), "$.coeffs", eq.order + 1);
    if (doc.contains("c0")) eq.c0 = parse_poly(doc["c0"], "$.c0");
    out.eq = std::move(eq);
  } else if (kind == "nonlinear") {
    NonlinearOde eq;
    eq.deriv_order = parse_count(field(doc, "m", "$"), "$.m", 1);
    const json& coeffs = field(doc, "coeffs", "$");
    if (!coeffs.is_array() || coeffs.size() < 2) schema_error("$.coeffs", "expected at least a_0 and a_1");
    eq.coeffs = parse_polys(coeffs, "$.coeffs", coeffs.size());
    out.eq = std::move(eq);
  } else if (kind == "constant") {
    ConstLinearEq eq;
    eq.order = parse_count(field(doc, "order", "$"), "$.order", 1);
    eq.coeffs = parse_values(field(doc, "coeffs", "$"), "$.coeffs");
    if (eq.coeffs.size() != eq.order) {
      schema_error("$.coeffs", "expected " + std::to_string(eq.order) + " coefficients a_0..a_{N-1}");
    }
    out.eq = std::move(eq);
  } else {
    schema_error("$.type", "unknown equation type \"" + kind + "\"");
  }
  if (doc.contains("taylor")) out.taylor = parse_values(doc["taylor"], "$.taylor");
  if (doc.contains("lattice")) out.lattice = parse_values(doc["lattice"], "$.lattice");
  return out;
}

SpecDocument parse_spec_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error("$", std::string("invalid JSON: ") + e.what());
  }
  return parse_spec(doc);
}

nlohmann::ordered_json serialize(const SpecDocument& doc) {
  nlohmann::ordered_json out;
  if (const auto* lin = std::get_if<LinearOde>(&doc.eq)) {
    out["type"] = "linear";
    out["order"] = lin->order;
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : lin->coeffs) coeffs.push_back(poly_json(c));
    out["coeffs"] = coeffs;
    out["c0"] = poly_json(lin->c0);
  } else if (const auto* non = std::get_if<NonlinearOde>(&doc.eq)) {
    out["type"] = "nonlinear";
    out["m"] = non->deriv_order;
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : non->coeffs) coeffs.push_back(poly_json(c));
    out["coeffs"] = coeffs;
  } else {
    const auto& con = std::get<ConstLinearEq>(doc.eq);
    out["type"] = "constant";
    out["order"] = con.order;
    out["coeffs"] = values_json(con.coeffs);
  }
  if (doc.taylor) out["taylor"] = values_json(*doc.taylor);
  if (doc.lattice) out["lattice"] = values_json(*doc.lattice);
  return out;
}

ConstNonlinearOde to_const_nonlinear(const NonlinearOde& eq) {
  ConstNonlinearOde out;
  out.deriv_order = eq.deriv_order;
  for (std::size_t j = 0; j < eq.coeffs.size(); ++j) {
    for (const auto& t : eq.coeffs[j].terms()) {
      if (t.power != 0) schema_error("$.coeffs[" + std::to_string(j) + "]", "coefficient depends on t");
    }
    const Rational c = eq.coeffs[j].constant_term();
    if (j == 0) {
      out.b0 = c;
    } else {
      out.coeffs.push_back(c);
    }
  }
  return out;
}

LinearOde to_linear(const ConstLinearEq& eq) {
  LinearOde out;
  out.order = eq.order;
  for (const auto& a : eq.coeffs) out.coeffs.push_back(PolyCoeff::constant(a));
  out.coeffs.push_back(PolyCoeff::constant(1));
  return out;
}

}  // namespace umbral::cli
