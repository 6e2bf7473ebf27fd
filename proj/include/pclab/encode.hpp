#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pclab/graph.hpp"
#include "pclab/polynomial.hpp"

namespace pclab {

// The polynomial system whose common roots are exactly the proper
// k-colourings of the graph. Axioms are partitioned by kind; the Boolean
// axioms x^2 - x are carried as a variable list because the ring is
// structurally multilinear (their polynomial image collapses to 0), but they
// count toward the axiom total and the membership/refutation machinery treats
// them as free.
struct ColInstance {
  Graph graph;
  uint32_t k = 0;
  Field field = Field::rationals();
  std::vector<Polynomial> vertex_sum;       // sum_i x_{v,i} - 1, one per vertex
  std::vector<Polynomial> vertex_conflict;  // x_{v,i} x_{v,i'}, i < i'
  std::vector<Polynomial> edge;             // x_{u,i} x_{v,i}
  std::vector<Variable> boolean_axioms;     // x_{v,i}^2 - x_{v,i}, one per variable

  size_t axiom_count() const {
    return vertex_sum.size() + vertex_conflict.size() + edge.size() + boolean_axioms.size();
  }
  // The non-Boolean axioms, in vertex-sum, conflict, edge order.
  std::vector<Polynomial> polynomial_axioms() const;
  size_t n_variables() const { return static_cast<size_t>(graph.n()) * k; }
};

ColInstance encode_polynomials(const Graph& g, uint32_t k, const Field& field);

// Flat variable index used by the CNF encoding and DIMACS output.
inline uint32_t flat_index(Variable v, uint32_t k) { return v.vertex * k + (v.colour - 1); }
inline Variable from_flat_index(uint32_t idx, uint32_t k) {
  return Variable{idx / k, idx % k + 1};
}

struct Literal {
  Variable var;
  bool positive = true;
};
using Clause = std::vector<Literal>;

struct CnfFormula {
  uint32_t n_vertices = 0;
  uint32_t k = 0;
  std::vector<Clause> clauses;

  size_t n_variables() const { return static_cast<size_t>(n_vertices) * k; }
};

CnfFormula encode_cnf(const Graph& g, uint32_t k);

// Standard translation: a width-w clause becomes the product of w factors,
// (1-x) for positive literals and x for negative ones; vanishes exactly on
// the satisfying assignments. Boolean axioms are implicit in the ring.
std::vector<Polynomial> cnf_to_polynomials(const CnfFormula& f, const Field& field);

// DIMACS: "p cnf <vars> <clauses>", 1-indexed literals, clauses 0-terminated.
std::string cnf_to_dimacs(const CnfFormula& f);

}  // namespace pclab
