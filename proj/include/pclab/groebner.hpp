#pragma once

#include <cstdint>
#include <vector>

#include "pclab/order.hpp"
#include "pclab/polynomial.hpp"

namespace pclab {

// Reduced Groebner basis of <generators> + the Boolean ideal, computed and
// stored entirely in the multilinear quotient: monomials are variable sets,
// products collapse x*x to x, and the Boolean axioms participate through the
// collapse itself plus one extra S-pair x*f per variable x in a leading
// monomial (all other pairs with x^2 - x have coprime leads). Leading
// monomial divisibility is set inclusion, so monomials over foreign
// variables reduce correctly as well.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder ord);
  GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder ord, Field field);

  const MonomialOrder& order() const { return ord_; }
  const Field& field() const { return field_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  // Reduced basis: monic, no leading monomial divides any monomial of
  // another element. Sorted by leading monomial.
  const std::vector<Polynomial>& basis() const { return basis_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }

  // Unique normal form: p minus an ideal element, supported on irreducible
  // monomials only. Linear and idempotent.
  Polynomial reduce(const Polynomial& p) const;
  // True iff some basis leading monomial is a subset of m's variable set.
  bool is_reducible(const Monomial& m) const;
  bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }

 private:
  void run_buchberger();
  Polynomial reduce_against(const Polynomial& p, const std::vector<Polynomial>& basis,
                            const std::vector<Monomial>& leads, size_t skip) const;

  MonomialOrder ord_;
  Field field_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leads_;
};

inline GroebnerBasis groebner(std::vector<Polynomial> generators, MonomialOrder ord) {
  return GroebnerBasis(std::move(generators), std::move(ord));
}

inline Polynomial reduce(const Polynomial& p, const GroebnerBasis& gb) {
  return gb.reduce(p);
}

inline bool is_reducible(const Monomial& m, const GroebnerBasis& gb) {
  return gb.is_reducible(m);
}

inline bool ideal_membership(const Polynomial& p, const GroebnerBasis& gb) {
  return gb.contains(p);
}

// Common 0/1 roots of a polynomial system, by cube enumeration. Roots are
// bitmasks over `variables` (bit i = value of variables[i]).
struct CommonRoots {
  std::vector<Variable> variables;
  std::vector<uint64_t> roots;
};

CommonRoots common_roots(const std::vector<Polynomial>& generators,
                         uint32_t variable_budget = 24);
// As above but over an explicitly extended variable universe.
CommonRoots common_roots(const std::vector<Polynomial>& generators,
                         const std::vector<Variable>& extra_variables,
                         uint32_t variable_budget = 24);

}  // namespace pclab
