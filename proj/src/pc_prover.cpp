#include "pclab/pc_prover.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "pclab/errors.hpp"

namespace pclab {

namespace {

// ---------------------------------------------------------------------------
// provenance DAG for certificates
// ---------------------------------------------------------------------------

struct CertNode {
  enum class Kind { axiom, mult, comb };
  Kind kind;
  size_t axiom_index = 0;
  Variable var{};
  int src = -1;
  std::vector<std::pair<Scalar, int>> terms;
};

struct CertArena {
  std::vector<CertNode> nodes;
  bool enabled = true;

  int axiom(size_t i) {
    if (!enabled) return -1;
    nodes.push_back({CertNode::Kind::axiom, i, {}, -1, {}});
    return static_cast<int>(nodes.size() - 1);
  }
  int mult(Variable x, int src) {
    if (!enabled) return -1;
    nodes.push_back({CertNode::Kind::mult, 0, x, src, {}});
    return static_cast<int>(nodes.size() - 1);
  }
  int comb(std::vector<std::pair<Scalar, int>> terms) {
    if (!enabled) return -1;
    nodes.push_back({CertNode::Kind::comb, 0, {}, -1, std::move(terms)});
    return static_cast<int>(nodes.size() - 1);
  }
};

// ---------------------------------------------------------------------------
// the monomial universe: multilinear monomials of degree <= D as bitmasks
// over the instance variables, id 0 = largest in the order
// ---------------------------------------------------------------------------

struct Universe {
  std::vector<Variable> vars;           // sorted by var_key ascending; bit i = vars[i]
  std::map<Variable, size_t> var_pos;   // inverse of vars
  std::vector<uint64_t> masks;          // sorted descending in the monomial order
  std::unordered_map<uint64_t, uint32_t> id_of;
  uint32_t degree = 0;

  uint32_t one_id() const { return static_cast<uint32_t>(masks.size() - 1); }
  uint32_t deg(uint32_t id) const {
    return static_cast<uint32_t>(__builtin_popcountll(masks[id]));
  }
};

uint64_t count_monomials(uint32_t n, uint32_t d, uint64_t cap) {
  uint64_t total = 0, binom = 1;
  for (uint32_t i = 0; i <= std::min(n, d); ++i) {
    total += binom;
    if (total > cap) return cap + 1;
    if (i < n) {
      if (binom > cap * 2 / std::max<uint64_t>(1, n - i)) return cap + 1;
      binom = binom * (n - i) / (i + 1);
    }
  }
  return total;
}

Universe build_universe(const std::vector<Polynomial>& axioms, uint32_t degree,
                        const MonomialOrder& ord, uint64_t budget) {
  Universe u;
  u.degree = degree;
  for (const auto& p : axioms) {
    auto vs = p.variables();
    u.vars.insert(u.vars.end(), vs.begin(), vs.end());
  }
  std::sort(u.vars.begin(), u.vars.end(),
            [&](Variable a, Variable b) { return ord.var_key(a) < ord.var_key(b); });
  u.vars.erase(std::unique(u.vars.begin(), u.vars.end()), u.vars.end());
  size_t nv = u.vars.size();
  if (nv > 64)
    throw ResourceError("degree-bounded prover supports at most 64 variables, got " +
                        std::to_string(nv));
  uint64_t count = count_monomials(static_cast<uint32_t>(nv), degree, budget);
  if (count > budget)
    throw ResourceError("monomial universe exceeds the budget of " + std::to_string(budget));

  u.masks.reserve(count);
  for (uint32_t d = std::min<uint32_t>(degree, static_cast<uint32_t>(nv)) + 1; d-- > 0;) {
    // Gosper's hack enumerates degree-d masks in increasing value
    size_t begin = u.masks.size();
    if (d == 0) {
      u.masks.push_back(0);
    } else {
      uint64_t m = (1ULL << d) - 1;
      uint64_t limit = nv == 64 ? ~0ULL : (1ULL << nv);
      while (nv == 64 ? true : m < limit) {
        u.masks.push_back(m);
        uint64_t c = m & -m, r = m + c;
        uint64_t next = (((r ^ m) >> 2) / c) | r;
        if (next <= m) break;
        m = next;
        if (nv < 64 && m >= limit) break;
      }
    }
    std::reverse(u.masks.begin() + begin, u.masks.end());  // descending within the degree
  }
  u.id_of.reserve(u.masks.size() * 2);
  for (uint32_t i = 0; i < u.masks.size(); ++i) u.id_of.emplace(u.masks[i], i);
  for (size_t i = 0; i < u.vars.size(); ++i) u.var_pos.emplace(u.vars[i], i);
  return u;
}

// ---------------------------------------------------------------------------
// row arithmetic policies
// ---------------------------------------------------------------------------

// generic sparse rows over any field
struct GenericRows {
  using Row = std::vector<std::pair<uint32_t, Scalar>>;  // sorted by id ascending
  const Field& field;

  bool empty(const Row& r) const { return r.empty(); }
  uint32_t lead(const Row& r) const { return r.front().first; }
  Scalar lead_coeff(const Row& r) const { return r.front().second; }

  Scalar coeff_at(const Row& r, uint32_t id) const {
    auto it = std::lower_bound(r.begin(), r.end(), id,
                               [](const auto& e, uint32_t x) { return e.first < x; });
    if (it != r.end() && it->first == id) return it->second;
    return field.zero();
  }

  void scale(Row& r, const Scalar& c) const {
    for (auto& e : r) e.second = field.mul(e.second, c);
  }

  // r := r + c * s
  void axpy(Row& r, const Scalar& c, const Row& s) const {
    Row out;
    out.reserve(r.size() + s.size());
    auto a = r.begin();
    auto b = s.begin();
    while (a != r.end() || b != s.end()) {
      if (b == s.end() || (a != r.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == r.end() || b->first < a->first) {
        out.push_back({b->first, field.mul(c, b->second)});
        ++b;
      } else {
        Scalar v = field.add(a->second, field.mul(c, b->second));
        if (!field.is_zero(v)) out.push_back({a->first, v});
        ++a;
        ++b;
      }
    }
    std::erase_if(out, [&](const auto& e) { return field.is_zero(e.second); });
    r = std::move(out);
  }

  template <class Fn>
  void for_each(const Row& r, Fn&& fn) const {
    for (const auto& [id, c] : r) fn(id, c);
  }
};

// bit-packed rows over GF(2)
struct PackedRows {
  using Row = std::vector<uint64_t>;
  const Field& field;
  size_t blocks = 0;

  bool empty(const Row& r) const {
    for (uint64_t b : r)
      if (b) return false;
    return true;
  }
  uint32_t lead(const Row& r) const {
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i]) return static_cast<uint32_t>(i * 64 + __builtin_ctzll(r[i]));
    throw InvariantError("lead of empty packed row");
  }
  Scalar lead_coeff(const Row&) const { return Scalar(uint64_t{1}); }
  Scalar coeff_at(const Row& r, uint32_t id) const {
    return Scalar(uint64_t{(r[id / 64] >> (id % 64)) & 1});
  }
  void scale(Row&, const Scalar&) const {}
  void axpy(Row& r, const Scalar&, const Row& s) const {
    for (size_t i = 0; i < r.size(); ++i) r[i] ^= s[i];
  }
  template <class Fn>
  void for_each(const Row& r, Fn&& fn) const {
    for (size_t i = 0; i < r.size(); ++i) {
      uint64_t b = r[i];
      while (b) {
        uint32_t id = static_cast<uint32_t>(i * 64 + __builtin_ctzll(b));
        fn(id, Scalar(uint64_t{1}));
        b &= b - 1;
      }
    }
  }
};

// ---------------------------------------------------------------------------
// the saturation engine
// ---------------------------------------------------------------------------

template <class Ops>
struct Engine {
  Ops ops;
  const Field& field;
  const Universe& u;
  CertArena& arena;

  std::vector<typename Ops::Row> rows;
  std::vector<int> row_node;
  std::vector<int32_t> row_of_lead;  // -1 if free
  bool found_one = false;

  Engine(Ops o, const Field& f, const Universe& uni, CertArena& a)
      : ops(o), field(f), u(uni), arena(a), row_of_lead(uni.masks.size(), -1) {}

  // insert a candidate; returns true if the basis grew
  bool insert(typename Ops::Row r, int node) {
    std::vector<std::pair<Scalar, int>> pending;
    pending.push_back({field.one(), node});
    while (!ops.empty(r)) {
      uint32_t lead = ops.lead(r);
      int32_t other = row_of_lead[lead];
      if (other < 0) {
        Scalar lc = ops.lead_coeff(r);
        if (!field.is_one(lc)) {
          Scalar inv = field.inv(lc);
          ops.scale(r, inv);
          for (auto& [c, n] : pending) c = field.mul(c, inv);
        }
        int final_node = -1;
        if (arena.enabled) {
          if (pending.size() == 1 && field.is_one(pending[0].first)) {
            final_node = pending[0].second;
          } else {
            final_node = arena.comb(pending);
          }
        }
        row_of_lead[lead] = static_cast<int32_t>(rows.size());
        rows.push_back(std::move(r));
        row_node.push_back(final_node);
        if (lead == u.one_id()) found_one = true;
        return true;
      }
      Scalar c = field.neg(ops.coeff_at(r, lead));
      ops.axpy(r, c, rows[other]);
      if (arena.enabled) pending.push_back({c, row_node[other]});
    }
    return false;
  }

  typename Ops::Row row_from_poly(const Polynomial& p) {
    std::vector<std::pair<uint32_t, Scalar>> entries;
    for (const auto& t : p.terms()) {
      uint64_t mask = 0;
      for (const auto& v : t.mono.vars()) {
        auto it = u.var_pos.find(v);
        check_invariant(it != u.var_pos.end(), "variable missing from universe");
        mask |= 1ULL << it->second;
      }
      auto it = u.id_of.find(mask);
      check_invariant(it != u.id_of.end(), "monomial missing from universe");
      entries.push_back({it->second, t.coeff});
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return make_row(entries);
  }

  typename Ops::Row make_row(const std::vector<std::pair<uint32_t, Scalar>>& entries);

  // multiply a row by variable bit x (indices shift to mask | xbit)
  typename Ops::Row times_var(const typename Ops::Row& r, size_t xpos) {
    uint64_t xbit = 1ULL << xpos;
    std::vector<std::pair<uint32_t, Scalar>> entries;
    ops.for_each(r, [&](uint32_t id, const Scalar& c) {
      uint64_t target = u.masks[id] | xbit;
      auto it = u.id_of.find(target);
      check_invariant(it != u.id_of.end(), "product escaped the universe");
      entries.push_back({it->second, c});
    });
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // collapse collisions: m and m|x map to the same monomial
    std::vector<std::pair<uint32_t, Scalar>> merged;
    for (auto& e : entries) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second = field.add(merged.back().second, e.second);
      } else {
        merged.push_back(e);
      }
    }
    std::erase_if(merged, [&](const auto& e) { return field.is_zero(e.second); });
    return make_row(merged);
  }

  void saturate() {
    if (found_one) return;
    bool changed = true;
    while (changed && !found_one) {
      changed = false;
      for (size_t xpos = 0; xpos < u.vars.size() && !found_one; ++xpos) {
        uint64_t xbit = 1ULL << xpos;
        // V_x: combinations with no degree-D monomial missing x.
        struct Work {
          typename Ops::Row row;
          std::vector<std::pair<Scalar, int>> prov;
        };
        std::vector<Work> work;
        work.reserve(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) {
          std::vector<std::pair<Scalar, int>> prov;
          if (arena.enabled) prov.push_back({field.one(), row_node[i]});
          work.push_back({rows[i], std::move(prov)});
        }
        // eliminate the bad coordinates (degree D, x absent), ascending id
        std::vector<uint32_t> bad;
        for (const auto& w : work) {
          ops.for_each(w.row, [&](uint32_t id, const Scalar&) {
            if (u.deg(id) == u.degree && !(u.masks[id] & xbit)) bad.push_back(id);
          });
        }
        std::sort(bad.begin(), bad.end());
        bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
        std::vector<char> dead(work.size(), 0);
        for (uint32_t c : bad) {
          size_t pivot = work.size();
          for (size_t i = 0; i < work.size(); ++i) {
            if (!dead[i] && !field.is_zero(ops.coeff_at(work[i].row, c))) {
              pivot = i;
              break;
            }
          }
          if (pivot == work.size()) continue;
          Scalar pc = ops.coeff_at(work[pivot].row, c);
          for (size_t i = 0; i < work.size(); ++i) {
            if (i == pivot || dead[i]) continue;
            Scalar v = ops.coeff_at(work[i].row, c);
            if (field.is_zero(v)) continue;
            Scalar factor = field.neg(field.div(v, pc));
            ops.axpy(work[i].row, factor, work[pivot].row);
            if (arena.enabled)
              for (const auto& [pcoef, pnode] : work[pivot].prov)
                work[i].prov.push_back({field.mul(factor, pcoef), pnode});
          }
          dead[pivot] = 1;
        }
        for (size_t i = 0; i < work.size() && !found_one; ++i) {
          if (dead[i] || ops.empty(work[i].row)) continue;
          int gnode = -1;
          if (arena.enabled) {
            // consolidate duplicate provenance entries
            auto& prov = work[i].prov;
            std::sort(prov.begin(), prov.end(),
                      [](const auto& a, const auto& b) { return a.second < b.second; });
            std::vector<std::pair<Scalar, int>> merged;
            for (auto& [c, n] : prov) {
              if (!merged.empty() && merged.back().second == n) {
                merged.back().first = field.add(merged.back().first, c);
              } else {
                merged.push_back({c, n});
              }
            }
            std::erase_if(merged, [&](const auto& e) { return field.is_zero(e.first); });
            if (merged.size() == 1 && field.is_one(merged[0].first)) {
              gnode = merged[0].second;
            } else {
              gnode = arena.comb(std::move(merged));
            }
            gnode = arena.mult(u.vars[xpos], gnode);
          }
          if (insert(times_var(work[i].row, xpos), gnode)) changed = true;
        }
      }
    }
  }
};

template <>
GenericRows::Row Engine<GenericRows>::make_row(
    const std::vector<std::pair<uint32_t, Scalar>>& entries) {
  return entries;
}

template <>
PackedRows::Row Engine<PackedRows>::make_row(
    const std::vector<std::pair<uint32_t, Scalar>>& entries) {
  PackedRows::Row r(ops.blocks, 0);
  for (const auto& [id, c] : entries) {
    if (!field.is_zero(c)) r[id / 64] ^= 1ULL << (id % 64);
  }
  return r;
}

Json certificate_json(const CertArena& arena, const Field& field, int final_node) {
  // topological order of the nodes reaching final_node
  std::vector<int> order;
  std::vector<int> mark(arena.nodes.size(), 0);
  std::vector<int> stack{final_node};
  while (!stack.empty()) {
    int n = stack.back();
    if (mark[n] == 2) {
      stack.pop_back();
      continue;
    }
    if (mark[n] == 1) {
      mark[n] = 2;
      order.push_back(n);
      stack.pop_back();
      continue;
    }
    mark[n] = 1;
    const CertNode& node = arena.nodes[n];
    if (node.kind == CertNode::Kind::mult) {
      if (mark[node.src] == 0) stack.push_back(node.src);
    } else if (node.kind == CertNode::Kind::comb) {
      for (const auto& [c, m] : node.terms)
        if (mark[m] == 0) stack.push_back(m);
    }
  }
  std::vector<int> step_of(arena.nodes.size(), -1);
  Json steps = Json::array();
  for (int n : order) {
    const CertNode& node = arena.nodes[n];
    step_of[n] = static_cast<int>(steps.size());
    if (node.kind == CertNode::Kind::axiom) {
      steps.push_back(Json{{"op", "axiom"}, {"axiom", node.axiom_index}});
    } else if (node.kind == CertNode::Kind::mult) {
      steps.push_back(Json{{"op", "mult"},
                           {"var", Json::array({node.var.vertex, node.var.colour})},
                           {"src", step_of[node.src]}});
    } else {
      Json terms = Json::array();
      for (const auto& [c, m] : node.terms)
        terms.push_back(Json::array({field.to_string(c), step_of[m]}));
      steps.push_back(Json{{"op", "comb"}, {"terms", terms}});
    }
  }
  return steps;
}

template <class Ops>
PcDegreeResult run_engine(Ops ops, const std::vector<Polynomial>& axioms, uint32_t degree,
                          const Field& field, const Universe& u, const PcOptions& options) {
  CertArena arena;
  arena.enabled = options.build_certificate;
  Engine<Ops> engine(ops, field, u, arena);
  for (size_t i = 0; i < axioms.size(); ++i) {
    if (axioms[i].is_zero()) continue;
    engine.insert(engine.row_from_poly(axioms[i]), arena.axiom(i));
    if (engine.found_one) break;
  }
  if (!engine.found_one) engine.saturate();

  PcDegreeResult result;
  result.degree_tried = degree;
  result.refutable = engine.found_one;
  result.span_dimension = engine.rows.size();
  if (result.refutable && options.build_certificate) {
    int32_t one_row = engine.row_of_lead[u.one_id()];
    check_invariant(one_row >= 0, "refutable but the unit row is missing");
    result.certificate = certificate_json(arena, field, engine.row_node[one_row]);
  }
  return result;
}

}  // namespace

PcDegreeResult pc_degree_refutable(const std::vector<Polynomial>& axioms, uint32_t degree,
                                   const Field& field, const MonomialOrder& ord,
                                   const PcOptions& options) {
  for (const auto& p : axioms)
    require(p.field() == field, "axioms over a different field");
  size_t max_axiom_degree = 0;
  for (const auto& p : axioms) max_axiom_degree = std::max(max_axiom_degree, p.degree());
  if (max_axiom_degree > degree) {
    PcDegreeResult r;
    r.degree_tried = degree;
    r.vacuous = true;
    return r;
  }
  Universe u = build_universe(axioms, degree, ord, options.monomial_budget);
  if (field.is_prime_field() && field.modulus() == 2 && !options.force_generic) {
    PackedRows ops{field, (u.masks.size() + 63) / 64};
    return run_engine(ops, axioms, degree, field, u, options);
  }
  GenericRows ops{field};
  return run_engine(ops, axioms, degree, field, u, options);
}

std::optional<uint32_t> min_refutation_degree(const std::vector<Polynomial>& axioms,
                                              const Field& field, const MonomialOrder& ord,
                                              uint32_t d_max, const PcOptions& options) {
  uint32_t start = 1;
  for (const auto& p : axioms)
    start = std::max(start, static_cast<uint32_t>(p.degree()));
  for (uint32_t d = start; d <= d_max; ++d) {
    PcDegreeResult r = pc_degree_refutable(axioms, d, field, ord, options);
    if (r.refutable) {
      if (d + 1 <= d_max) {
        PcDegreeResult above = pc_degree_refutable(axioms, d + 1, field, ord, options);
        check_invariant(above.refutable, "refutable at D but not at D+1");
      }
      return d;
    }
  }
  return std::nullopt;
}

bool replay_certificate(const std::vector<Polynomial>& axioms, const Field& field,
                        const Json& certificate, uint32_t degree) {
  std::vector<Polynomial> derived;
  for (const auto& step : certificate) {
    std::string op = step.at("op").get<std::string>();
    Polynomial p(field);
    if (op == "axiom") {
      size_t i = step.at("axiom").get<size_t>();
      if (i >= axioms.size()) return false;
      p = axioms[i];
    } else if (op == "mult") {
      size_t src = step.at("src").get<size_t>();
      if (src >= derived.size()) return false;
      Variable x{step.at("var").at(0).get<uint32_t>(), step.at("var").at(1).get<uint32_t>()};
      p = derived[src].times_variable(x);
    } else if (op == "comb") {
      for (const auto& term : step.at("terms")) {
        Scalar c = field.from_string(term.at(0).get<std::string>());
        size_t src = term.at(1).get<size_t>();
        if (src >= derived.size()) return false;
        p = p.add(derived[src].scale(c));
      }
    } else {
      return false;
    }
    if (p.degree() > degree) return false;
    derived.push_back(std::move(p));
  }
  return !derived.empty() && derived.back() == Polynomial::one(field);
}

}  // namespace pclab
