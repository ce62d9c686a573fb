#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qshuffle/laurent.hpp"
#include "qshuffle/param_scalar.hpp"

namespace qsh {

/// JSON form: { "vars": [names], "terms": [ { "exp": [ints], "coeff": str } ] }.
inline nlohmann::json laurent_to_json(const LaurentPoly<ParamScalar>& p,
                                      const std::vector<std::string>& vars) {
  nlohmann::json j;
  j["vars"] = vars;
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json t;
    t["exp"] = e;
    t["coeff"] = c.str();
    j["terms"].push_back(std::move(t));
  }
  return j;
}

inline LaurentPoly<ParamScalar> laurent_from_json(const nlohmann::json& j,
                                                  std::vector<std::string>* vars = nullptr) {
  if (vars) *vars = j.at("vars").get<std::vector<std::string>>();
  int arity = static_cast<int>(j.at("vars").size());
  LaurentPoly<ParamScalar> p(arity);
  for (const auto& t : j.at("terms")) {
    ExpVec e = t.at("exp").get<ExpVec>();
    p.add_term(e, ParamScalar::parse(t.at("coeff").get<std::string>()));
  }
  return p;
}

}  // namespace qsh
