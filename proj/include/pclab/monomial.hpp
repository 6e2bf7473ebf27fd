#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pclab {

// Indicator variable x_{v,i}: vertex v gets colour i (colours are 1-based).
struct Variable {
  uint32_t vertex = 0;
  uint32_t colour = 1;

  auto operator<=>(const Variable&) const = default;
};

// A multilinear monomial: a set of variables. Degree is the set size and the
// empty set is the constant monomial 1, so squares never arise anywhere.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Variable> vars);
  static Monomial unit() { return Monomial(); }
  static Monomial var(Variable v) { return Monomial({v}); }

  size_t degree() const { return vars_.size(); }
  bool is_unit() const { return vars_.empty(); }
  const std::vector<Variable>& vars() const { return vars_; }

  bool contains(Variable v) const;
  // Divisibility in the multilinear ring is set inclusion.
  bool divides(const Monomial& m) const;

  Monomial times(const Monomial& m) const;  // set union (x*x collapses)
  Monomial times(Variable v) const;
  Monomial quotient_by(const Monomial& m) const;  // set difference; m must divide

  // Intrinsic canonical order (degree-free, lexicographic on the sorted
  // variable list). Used only to keep term lists canonical; monomial
  // comparison in the algebra goes through MonomialOrder.
  auto operator<=>(const Monomial& o) const { return vars_ <=> o.vars_; }
  bool operator==(const Monomial& o) const = default;

  std::string to_string() const;

 private:
  std::vector<Variable> vars_;  // sorted, unique
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& v : m.vars()) {
      uint64_t k = (static_cast<uint64_t>(v.vertex) << 32) | v.colour;
      h ^= std::hash<uint64_t>{}(k) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace pclab
