#include "pclab/encode.hpp"

#include <sstream>

#include "pclab/errors.hpp"

namespace pclab {

std::vector<Polynomial> ColInstance::polynomial_axioms() const {
  std::vector<Polynomial> out;
  out.reserve(vertex_sum.size() + vertex_conflict.size() + edge.size());
  out.insert(out.end(), vertex_sum.begin(), vertex_sum.end());
  out.insert(out.end(), vertex_conflict.begin(), vertex_conflict.end());
  out.insert(out.end(), edge.begin(), edge.end());
  return out;
}

ColInstance encode_polynomials(const Graph& g, uint32_t k, const Field& field) {
  require(k >= 1, "colour count must be >= 1");
  ColInstance inst;
  inst.graph = g;
  inst.k = k;
  inst.field = field;

  for (uint32_t v = 0; v < g.n(); ++v) {
    std::vector<Term> terms;
    for (uint32_t i = 1; i <= k; ++i)
      terms.push_back({Monomial::var(Variable{v, i}), field.one()});
    terms.push_back({Monomial::unit(), field.from_int(-1)});
    inst.vertex_sum.push_back(Polynomial(field, std::move(terms)));

    for (uint32_t i = 1; i <= k; ++i)
      for (uint32_t j = i + 1; j <= k; ++j)
        inst.vertex_conflict.push_back(
            Polynomial::monomial(field, Monomial({Variable{v, i}, Variable{v, j}})));

    for (uint32_t i = 1; i <= k; ++i) inst.boolean_axioms.push_back(Variable{v, i});
  }
  for (auto [u, v] : g.edges())
    for (uint32_t i = 1; i <= k; ++i)
      inst.edge.push_back(
          Polynomial::monomial(field, Monomial({Variable{u, i}, Variable{v, i}})));

  check_invariant(inst.vertex_sum.size() == g.n(), "vertex-sum axiom count");
  check_invariant(inst.vertex_conflict.size() == static_cast<size_t>(g.n()) * k * (k - 1) / 2,
                  "vertex-conflict axiom count");
  check_invariant(inst.edge.size() == g.m() * k, "edge axiom count");
  check_invariant(inst.boolean_axioms.size() == static_cast<size_t>(g.n()) * k,
                  "boolean axiom count");
  return inst;
}

CnfFormula encode_cnf(const Graph& g, uint32_t k) {
  require(k >= 1, "colour count must be >= 1");
  CnfFormula f;
  f.n_vertices = g.n();
  f.k = k;
  for (uint32_t v = 0; v < g.n(); ++v) {
    Clause wide;
    for (uint32_t i = 1; i <= k; ++i) wide.push_back({Variable{v, i}, true});
    f.clauses.push_back(std::move(wide));
  }
  for (uint32_t v = 0; v < g.n(); ++v)
    for (uint32_t i = 1; i <= k; ++i)
      for (uint32_t j = i + 1; j <= k; ++j)
        f.clauses.push_back({{Variable{v, i}, false}, {Variable{v, j}, false}});
  for (auto [u, v] : g.edges())
    for (uint32_t i = 1; i <= k; ++i)
      f.clauses.push_back({{Variable{u, i}, false}, {Variable{v, i}, false}});
  size_t expected = g.n() + static_cast<size_t>(g.n()) * k * (k - 1) / 2 + g.m() * k;
  check_invariant(f.clauses.size() == expected, "clause count");
  return f;
}

std::vector<Polynomial> cnf_to_polynomials(const CnfFormula& f, const Field& field) {
  std::vector<Polynomial> out;
  out.reserve(f.clauses.size());
  for (const auto& clause : f.clauses) {
    Polynomial p = Polynomial::one(field);
    for (const auto& lit : clause) {
      Polynomial x = Polynomial::variable(field, lit.var);
      p = p.multiply(lit.positive ? Polynomial::one(field).sub(x) : x);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::string cnf_to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.n_variables() << " " << f.clauses.size() << "\n";
  for (const auto& clause : f.clauses) {
    for (const auto& lit : clause) {
      long id = static_cast<long>(flat_index(lit.var, f.k)) + 1;
      out << (lit.positive ? id : -id) << " ";
    }
    out << "0\n";
  }
  return out.str();
}

}  // namespace pclab
