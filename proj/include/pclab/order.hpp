#pragma once

#include <cstdint>
#include <vector>

#include "pclab/monomial.hpp"
#include "pclab/polynomial.hpp"

namespace pclab {

enum class Cmp { less, equal, greater };

// Degree-then-lex monomial order induced by a linear order on vertices and
// the colour indices: x_{u,i} precedes x_{v,j} iff u precedes v, or u = v and
// i < j. Monomials compare by total degree first, ties broken lexicographically
// with variable sequences read from the largest variable down. Total, with 1
// minimal, and it respects multiplication by disjoint monomials.
class MonomialOrder {
 public:
  // vertex_rank[v] = position of vertex v (a permutation of 0..n-1).
  MonomialOrder(std::vector<uint32_t> vertex_rank, uint32_t colours);

  static MonomialOrder identity(uint32_t n_vertices, uint32_t colours);

  uint32_t n_vertices() const { return static_cast<uint32_t>(rank_.size()); }
  uint32_t colours() const { return k_; }
  uint32_t rank_of(uint32_t vertex) const;

  // (rank, colour) key; smaller key = earlier variable.
  std::pair<uint32_t, uint32_t> var_key(Variable v) const;

  Cmp compare_vars(Variable a, Variable b) const;
  Cmp compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::less; }

  Monomial leading_monomial(const Polynomial& p) const;
  Scalar leading_coeff(const Polynomial& p) const;

 private:
  std::vector<uint32_t> rank_;
  uint32_t k_;
};

}  // namespace pclab
