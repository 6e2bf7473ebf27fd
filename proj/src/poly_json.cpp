#include "pclab/poly_json.hpp"

#include "pclab/errors.hpp"

namespace pclab {

Json field_to_json(const Field& f) {
  if (f.is_prime_field()) return Json{{"p", f.modulus()}};
  return Json{{"q", true}};
}

Field field_from_json(const Json& j) {
  if (j.contains("p")) return Field::prime(j.at("p").get<uint64_t>());
  if (j.contains("q") && j.at("q").get<bool>()) return Field::rationals();
  throw DomainError("bad field tag: " + j.dump());
}

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json vars = Json::array();
    for (const auto& v : t.mono.vars()) vars.push_back(Json::array({v.vertex, v.colour}));
    terms.push_back(Json{{"monomial", vars}, {"coeff", p.field().to_string(t.coeff)}});
  }
  return Json{{"field", field_to_json(p.field())}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
  Field f = field_from_json(j.at("field"));
  std::vector<Term> terms;
  for (const auto& tj : j.at("terms")) {
    std::vector<Variable> vars;
    for (const auto& vj : tj.at("monomial"))
      vars.push_back(Variable{vj.at(0).get<uint32_t>(), vj.at(1).get<uint32_t>()});
    terms.push_back({Monomial(std::move(vars)), f.from_string(tj.at("coeff").get<std::string>())});
  }
  return Polynomial(f, std::move(terms));
}

}  // namespace pclab
