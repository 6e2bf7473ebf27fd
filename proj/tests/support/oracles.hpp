#pragma once

// Independent reference implementations used to cross-check the production
// code. Everything here is deliberately written as plain brute force and
// must stay decoupled from the algorithms it validates.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pclab/closure.hpp"
#include "pclab/graph.hpp"
#include "pclab/groebner.hpp"
#include "pclab/order.hpp"
#include "pclab/polynomial.hpp"
#include "pclab/rng.hpp"

namespace oracle {

using namespace pclab;

// Two multilinear polynomials over the same field are equal iff they agree on
// the whole Boolean cube of their joint variables.
inline bool equal_on_cube(const Polynomial& p, const Polynomial& q) {
  std::vector<Variable> vars = p.variables();
  auto qv = q.variables();
  vars.insert(vars.end(), qv.begin(), qv.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  const Field& f = p.field();
  for (uint64_t mask = 0; mask < (1ULL << vars.size()); ++mask) {
    auto assignment = [&](Variable v) -> std::optional<bool> {
      auto it = std::lower_bound(vars.begin(), vars.end(), v);
      if (it == vars.end() || !(*it == v)) return std::nullopt;
      size_t i = it - vars.begin();
      return (mask >> i) & 1;
    };
    if (!f.eq(p.evaluate(assignment), q.evaluate(assignment))) return false;
  }
  return true;
}

// Does g vanish on every common 0/1 root of the generators? (The semantic
// side of the implication/membership equivalence.)
inline bool vanishes_on_common_roots(const Polynomial& g,
                                     const std::vector<Polynomial>& generators) {
  std::vector<Variable> vars = g.variables();
  for (const auto& p : generators) {
    auto pv = p.variables();
    vars.insert(vars.end(), pv.begin(), pv.end());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  const Field& f = g.field();
  for (uint64_t mask = 0; mask < (1ULL << vars.size()); ++mask) {
    auto assignment = [&](Variable v) -> std::optional<bool> {
      auto it = std::lower_bound(vars.begin(), vars.end(), v);
      if (it == vars.end() || !(*it == v)) return std::nullopt;
      size_t i = it - vars.begin();
      return (mask >> i) & 1;
    };
    bool is_root = true;
    for (const auto& p : generators) {
      if (!f.is_zero(p.evaluate(assignment))) {
        is_root = false;
        break;
      }
    }
    if (is_root && !f.is_zero(g.evaluate(assignment))) return false;
  }
  return true;
}

// The multilinear span of { collapse(t * g) : t multilinear, g a generator },
// which is exactly the ideal of the generators plus the Boolean axioms
// intersected with the multilinear space. Kept as an echelon basis keyed by
// the order's leading monomials, so it can answer normal-form queries
// without any Buchberger machinery.
class SpanOracle {
 public:
  SpanOracle(const std::vector<Polynomial>& generators, const MonomialOrder& ord, Field field,
             std::vector<Variable> universe = {})
      : ord_(ord), field_(field) {
    std::vector<Variable> vars = std::move(universe);
    for (const auto& g : generators) {
      auto gv = g.variables();
      vars.insert(vars.end(), gv.begin(), gv.end());
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (uint64_t mask = 0; mask < (1ULL << vars.size()); ++mask) {
      std::vector<Variable> sub;
      for (size_t i = 0; i < vars.size(); ++i)
        if ((mask >> i) & 1) sub.push_back(vars[i]);
      Monomial t(sub);
      for (const auto& g : generators)
        insert(g.times_monomial(t, field_.one()));
    }
  }

  // Unique normal form modulo the span (full reduction by the echelon).
  Polynomial normal_form(const Polynomial& p) const {
    Polynomial h = p;
    Polynomial out(field_);
    while (!h.is_zero()) {
      Monomial t = ord_.leading_monomial(h);
      Scalar c = h.coeff(t);
      auto it = rows_.find(key_of(t));
      if (it == rows_.end()) {
        out = out.add(Polynomial::monomial(field_, t).scale(c));
        h = h.sub(Polynomial::monomial(field_, t).scale(c));
      } else {
        h = h.sub(it->second.scale(c));
      }
    }
    return out;
  }

  bool member(const Polynomial& p) const { return normal_form(p).is_zero(); }
  bool reducible(const Monomial& m) const { return rows_.count(key_of(m)) != 0; }

 private:
  std::string key_of(const Monomial& m) const {
    std::string k;
    for (const auto& v : m.vars())
      k += std::to_string(v.vertex) + "," + std::to_string(v.colour) + ";";
    return k;
  }

  void insert(Polynomial p) {
    while (!p.is_zero()) {
      Monomial lm = ord_.leading_monomial(p);
      auto it = rows_.find(key_of(lm));
      if (it == rows_.end()) {
        p = p.scale(field_.inv(p.coeff(lm)));
        rows_.emplace(key_of(lm), std::move(p));
        return;
      }
      p = p.sub(it->second.scale(p.coeff(lm)));
    }
  }

  MonomialOrder ord_;
  Field field_;
  std::map<std::string, Polynomial> rows_;  // leading-monomial key -> monic row
};

// Exhaustive closed-superset search for the closure definition: W is closed
// iff it is descendant-closed and admits no 2-, 3-, 4-hop or lasso. Returns
// all minimal closed supersets of U (the production code must produce the
// unique one).
inline bool closed_brute(const Graph& g, const VertexOrder& ord, const std::vector<uint32_t>& w) {
  std::vector<char> in(g.n(), 0);
  for (uint32_t v : w) in[v] = 1;
  // descendant-closed: no edge from inside to a lower-ranked outside vertex
  for (uint32_t v : w)
    for (uint32_t u : g.neighbours(v))
      if (!in[u] && ord.before(u, v)) return false;
  // hops: simple paths/cycles of length 2..4, endpoints inside, interior outside
  uint32_t n = g.n();
  for (uint32_t a = 0; a < n; ++a) {
    if (!in[a]) continue;
    for (uint32_t x : g.neighbours(a)) {
      if (in[x]) continue;
      for (uint32_t b : g.neighbours(x)) {  // length 2
        if (b != a && in[b]) return false;
      }
      for (uint32_t y : g.neighbours(x)) {
        if (in[y] || y == a) continue;
        for (uint32_t b : g.neighbours(y)) {  // length 3 (paths and cycles)
          if (b == x) continue;
          if (b == a) return false;  // cycle a-x-y-a
          if (in[b]) return false;   // path a-x-y-b
        }
        for (uint32_t z : g.neighbours(y)) {
          if (in[z] || z == a || z == x) continue;
          for (uint32_t b : g.neighbours(z)) {  // length 4
            if (b == x || b == y) continue;
            if (b == a) return false;  // cycle a-x-y-z-a
            if (in[b]) return false;   // path a-x-y-z-b
          }
        }
      }
      // lasso: edge a-x plus a triangle through x avoiding a
      for (uint32_t y : g.neighbours(x)) {
        if (in[y] || y == a) continue;
        for (uint32_t z : g.neighbours(y)) {
          if (in[z] || z == a || z == x) continue;
          if (g.has_edge(z, x)) return false;
        }
      }
    }
  }
  return true;
}

inline std::vector<std::vector<uint32_t>> minimal_closed_supersets(
    const Graph& g, const VertexOrder& ord, const std::vector<uint32_t>& u) {
  uint32_t n = g.n();
  uint32_t umask = 0;
  for (uint32_t v : u) umask |= 1u << v;
  std::vector<uint32_t> closed_sets;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask & umask) != umask) continue;
    std::vector<uint32_t> w;
    for (uint32_t v = 0; v < n; ++v)
      if (mask & (1u << v)) w.push_back(v);
    if (closed_brute(g, ord, w)) closed_sets.push_back(mask);
  }
  std::vector<std::vector<uint32_t>> minimal;
  for (uint32_t m1 : closed_sets) {
    bool is_minimal = true;
    for (uint32_t m2 : closed_sets)
      if (m2 != m1 && (m1 & m2) == m2) is_minimal = false;
    if (is_minimal) {
      std::vector<uint32_t> w;
      for (uint32_t v = 0; v < n; ++v)
        if (m1 & (1u << v)) w.push_back(v);
      minimal.push_back(w);
    }
  }
  return minimal;
}

// Plain recursive proper-colouring enumerator (no pruning tricks); counts or
// lists all proper k-colourings.
inline void enumerate_colourings(const Graph& g, uint32_t k, uint32_t v,
                                 std::vector<uint32_t>& partial,
                                 std::vector<std::vector<uint32_t>>& out) {
  if (v == g.n()) {
    out.push_back(partial);
    return;
  }
  for (uint32_t c = 1; c <= k; ++c) {
    bool ok = true;
    for (uint32_t w : g.neighbours(v))
      if (w < v && partial[w] == c) ok = false;
    if (!ok) continue;
    partial[v] = c;
    enumerate_colourings(g, k, v + 1, partial, out);
  }
  partial[v] = 0;
}

inline std::vector<std::vector<uint32_t>> all_proper_colourings(const Graph& g, uint32_t k) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> partial(g.n(), 0);
  enumerate_colourings(g, k, 0, partial, out);
  return out;
}

// Random polynomial over the given variables: up to max_terms terms of
// degree <= max_degree with small coefficients.
inline Polynomial random_polynomial(const Field& f, const std::vector<Variable>& vars, Rng& rng,
                                    size_t max_terms, size_t max_degree) {
  std::vector<Term> terms;
  size_t n_terms = 1 + rng.below(max_terms);
  for (size_t t = 0; t < n_terms; ++t) {
    size_t deg = rng.below(max_degree + 1);
    std::vector<Variable> vs;
    for (size_t i = 0; i < deg; ++i) vs.push_back(vars[rng.below(vars.size())]);
    long coeff = static_cast<long>(rng.below(9)) - 4;
    terms.push_back({Monomial(vs), f.from_int(coeff)});
  }
  return Polynomial(f, std::move(terms));
}

inline Graph random_graph(uint32_t n, uint32_t percent, Rng& rng) {
  Graph g(n);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (rng.below(100) < percent) g.add_edge(u, v);
  return g;
}

}  // namespace oracle
