#pragma once

// Canonical JSON interchange for polynomials and planar maps:
//   {"vars":["x","y"],"terms":[{"e":[2,0],"c":["1","0","0","0"]}, ...]}
// Rationals are "p/q" strings (or "p" for integers); terms appear in
// descending graded-lex order.

#include <string>
#include <vector>

#include <json.hpp>

#include "foldmap/poly.hpp"

namespace foldmap {

using json = nlohmann::json;

inline json to_json(const CycloElem& c) {
  json out = json::array();
  for (const auto& r : c.components()) out.push_back(rational_string(r));
  return out;
}

inline CycloElem cyclo_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw math_error("coefficient must be an array of four rationals");
  std::array<Rational, 4> c;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!j[k].is_string()) throw math_error("coefficient components must be strings");
    c[k] = parse_rational(j[k].get<std::string>());
  }
  return {c[0], c[1], c[2], c[3]};
}

inline json to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    std::vector<unsigned> e;
    for (std::size_t k = 0; k < m.size(); ++k) e.push_back(m[k]);
    terms.push_back({{"e", e}, {"c", to_json(c)}});
  }
  return {{"vars", p.vars()}, {"terms", terms}};
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
    throw math_error("polynomial JSON needs 'vars' and 'terms'");
  }
  auto vars = std::make_shared<const VarList>(j.at("vars").get<VarList>());
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    auto e = t.at("e").get<std::vector<unsigned>>();
    if (e.size() != vars->size()) throw context_error("exponent vector length does not match 'vars'");
    terms.emplace_back(Monomial::from(e), cyclo_from_json(t.at("c")));
  }
  return Poly(vars, std::move(terms));
}

inline json to_json(const PolyMap2& f) {
  return {{"label", f.label}, {"model", model_name(f.model)}, {"first", to_json(f.first)}, {"second", to_json(f.second)}};
}

inline PolyMap2 map_from_json(const json& j) {
  PolyMap2 f{poly_from_json(j.at("first")), poly_from_json(j.at("second")), Model::XY, j.value("label", "")};
  std::string model = j.value("model", "xy");
  if (model == "zw") {
    f.model = Model::ZW;
  } else if (model != "xy") {
    throw math_error("unknown model '" + model + "'");
  }
  return f;
}

}  // namespace foldmap
