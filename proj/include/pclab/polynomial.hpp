#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pclab/field.hpp"
#include "pclab/monomial.hpp"

namespace pclab {

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Exact multilinear polynomial over a fixed field. Terms are kept sorted by
// the intrinsic monomial order with no zero coefficients, so equal
// polynomials have identical term lists.
class Polynomial {
 public:
  explicit Polynomial(Field f) : field_(f) {}
  Polynomial(Field f, std::vector<Term> terms);

  static Polynomial zero(Field f) { return Polynomial(f); }
  static Polynomial constant(Field f, const Scalar& c);
  static Polynomial one(Field f) { return constant(f, f.one()); }
  static Polynomial monomial(Field f, const Monomial& m);
  static Polynomial variable(Field f, Variable v) { return monomial(f, Monomial::var(v)); }

  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  size_t degree() const;  // 0 for the zero polynomial

  Scalar coeff(const Monomial& m) const;  // zero if absent
  std::vector<Variable> variables() const;

  Polynomial add(const Polynomial& q) const;
  Polynomial sub(const Polynomial& q) const;
  Polynomial scale(const Scalar& a) const;
  Polynomial negate() const;
  Polynomial multiply(const Polynomial& q) const;
  Polynomial times_monomial(const Monomial& m, const Scalar& a) const;
  Polynomial times_variable(Variable x) const { return times_monomial(Monomial::var(x), field_.one()); }

  // Evaluate on a 0/1 assignment; every variable of the polynomial must be
  // assigned. The assignment is any callable Variable -> optional<bool>.
  Scalar evaluate(const std::function<std::optional<bool>(Variable)>& assignment) const;

  // Substitute variables by polynomials (variables outside the map pass
  // through) and re-canonicalize in the multilinear ring.
  Polynomial substitute(const std::map<Variable, Polynomial>& rho) const;

  bool operator==(const Polynomial& q) const;
  bool operator!=(const Polynomial& q) const { return !(*this == q); }

  std::string to_string() const;

 private:
  void assert_same_field(const Polynomial& q) const;

  Field field_;
  std::vector<Term> terms_;  // sorted by intrinsic monomial order, no zeros
};

}  // namespace pclab
