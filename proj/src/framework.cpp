#include "pclab/framework.hpp"

#include <algorithm>
#include <numeric>

#include "pclab/errors.hpp"
#include "pclab/parallel.hpp"
#include "pclab/rng.hpp"

namespace pclab {

namespace {

bool subset_of(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<uint32_t> vertices_of(const Monomial& m) {
  std::vector<uint32_t> out;
  for (const auto& v : m.vars()) out.push_back(v.vertex);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<uint32_t> vertices_of_poly(const Polynomial& p) {
  std::vector<uint32_t> out;
  for (const auto& v : p.variables()) out.push_back(v.vertex);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json monomial_to_json(const Monomial& m) {
  Json vars = Json::array();
  for (const auto& v : m.vars()) vars.push_back(Json::array({v.vertex, v.colour}));
  return vars;
}

}  // namespace

FrameworkContext build_context(const Graph& g, uint32_t k, const Field& field, uint32_t delta,
                               const ColouringBudget& budget) {
  FrameworkContext ctx;
  ctx.instance = encode_polynomials(g, k, field);
  ctx.delta = delta;
  ctx.t_delta = high_degree_cover(g, delta);

  std::vector<char> in_t(g.n(), 0);
  for (uint32_t v : ctx.t_delta) in_t[v] = 1;
  std::vector<uint32_t> residual_vertices;
  for (uint32_t v = 0; v < g.n(); ++v)
    if (!in_t[v]) residual_vertices.push_back(v);

  std::vector<uint32_t> vmap;
  Graph residual = g.induced(residual_vertices, &vmap);

  Colouring local;
  ctx.c_exact = true;
  if (residual.n() == 0) {
    ctx.c = 0;
  } else if (residual.n() <= budget.max_vertices) {
    try {
      ctx.c = chromatic_number(residual, budget);
      local = *is_k_colourable(residual, ctx.c, budget);
    } catch (const ResourceError&) {
      ctx.c_exact = false;
    }
  } else {
    ctx.c_exact = false;
  }
  if (!ctx.c_exact) {
    local = greedy_colouring(residual);
    ctx.c = local.empty() ? 0 : *std::max_element(local.begin(), local.end());
  }
  if (ctx.c == 0 && residual.n() > 0) ctx.c = 1;

  ctx.residual_colouring.assign(g.n(), 0);
  for (size_t i = 0; i < vmap.size(); ++i) ctx.residual_colouring[vmap[i]] = local[i];

  // order: the cover first (by id), then the colour classes in increasing
  // order (by id inside a class)
  std::vector<uint32_t> order;
  order.insert(order.end(), ctx.t_delta.begin(), ctx.t_delta.end());
  for (uint32_t colour = 1; colour <= ctx.c; ++colour)
    for (uint32_t v = 0; v < g.n(); ++v)
      if (!in_t[v] && ctx.residual_colouring[v] == colour) order.push_back(v);
  check_invariant(order.size() == g.n(), "vertex order misses vertices");
  std::vector<uint32_t> rank(g.n());
  for (uint32_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;
  ctx.vertex_order = VertexOrder(rank);
  ctx.monomial_order = MonomialOrder(rank, k);
  return ctx;
}

std::vector<uint32_t> monomial_closure(const FrameworkContext& ctx, const Monomial& m) {
  std::vector<uint32_t> seed = vertices_of(m);
  seed.insert(seed.end(), ctx.t_delta.begin(), ctx.t_delta.end());
  return closure(ctx.graph(), ctx.vertex_order, seed);
}

std::vector<Polynomial> col_axioms_on_vertices(const Graph& g, uint32_t k, const Field& field,
                                               const std::vector<uint32_t>& vertices) {
  std::vector<char> in(g.n(), 0);
  for (uint32_t v : vertices) in[v] = 1;
  std::vector<Polynomial> axioms;
  for (uint32_t v : vertices) {
    std::vector<Term> terms;
    for (uint32_t i = 1; i <= k; ++i)
      terms.push_back({Monomial::var(Variable{v, i}), field.one()});
    terms.push_back({Monomial::unit(), field.from_int(-1)});
    axioms.push_back(Polynomial(field, std::move(terms)));
  }
  for (uint32_t v : vertices)
    for (uint32_t i = 1; i <= k; ++i)
      for (uint32_t j = i + 1; j <= k; ++j)
        axioms.push_back(Polynomial::monomial(field, Monomial({Variable{v, i}, Variable{v, j}})));
  for (auto [u, v] : g.edges())
    if (in[u] && in[v])
      for (uint32_t i = 1; i <= k; ++i)
        axioms.push_back(Polynomial::monomial(field, Monomial({Variable{u, i}, Variable{v, i}})));
  return axioms;
}

SupportSet support(const FrameworkContext& ctx, const Monomial& m) {
  SupportSet s;
  s.vertices = monomial_closure(ctx, m);
  s.axioms = col_axioms_on_vertices(ctx.graph(), ctx.k(), ctx.field(), s.vertices);
  s.boolean_count = s.vertices.size() * ctx.k();
  return s;
}

std::vector<uint32_t> PseudoReducer::closure_of(const Monomial& m) {
  std::vector<uint32_t> seed = vertices_of(m);
  seed.insert(seed.end(), ctx_.t_delta.begin(), ctx_.t_delta.end());
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = closure_cache_.find(seed);
    if (it != closure_cache_.end()) return it->second;
  }
  auto result = closure(ctx_.graph(), ctx_.vertex_order, seed);
  std::lock_guard<std::mutex> lock(mu_);
  return closure_cache_.emplace(std::move(seed), std::move(result)).first->second;
}

const GroebnerBasis& PseudoReducer::basis_for(const std::vector<uint32_t>& closure_vertices) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = basis_cache_.find(closure_vertices);
    if (it != basis_cache_.end()) return *it->second;
  }
  auto gens =
      col_axioms_on_vertices(ctx_.graph(), ctx_.k(), ctx_.field(), closure_vertices);
  auto gb = std::make_unique<GroebnerBasis>(std::move(gens), ctx_.monomial_order, ctx_.field());
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = basis_cache_.emplace(closure_vertices, std::move(gb));
  return *it->second;
}

Polynomial PseudoReducer::reduce_monomial(const Monomial& m) {
  const GroebnerBasis& gb = basis_for(closure_of(m));
  return gb.reduce(Polynomial::monomial(ctx_.field(), m));
}

Polynomial PseudoReducer::operator()(const Polynomial& p) {
  Polynomial acc(ctx_.field());
  for (const auto& t : p.terms()) acc = acc.add(reduce_monomial(t.mono).scale(t.coeff));
  return acc;
}

Polynomial pseudo_reduce(PseudoReducer& reducer, const Polynomial& p) { return reducer(p); }

// ---------------------------------------------------------------------------
// monomial pool
// ---------------------------------------------------------------------------

MonomialPool sample_monomial_pool(const FrameworkContext& ctx, uint32_t degree, uint64_t samples,
                                  uint64_t seed, uint64_t exhaustive_limit) {
  MonomialPool pool;
  std::vector<Variable> all_vars;
  for (uint32_t v = 0; v < ctx.graph().n(); ++v)
    for (uint32_t i = 1; i <= ctx.k(); ++i) all_vars.push_back(Variable{v, i});
  size_t nv = all_vars.size();

  // count monomials of degree <= D
  mpz_class total = 0, binom = 1;
  for (uint32_t d = 0; d <= std::min<uint32_t>(degree, nv); ++d) {
    total += binom;
    binom = binom * static_cast<unsigned long>(nv - d) / (d + 1);
  }

  if (total <= exhaustive_limit) {
    pool.exhaustive = true;
    std::vector<size_t> picks;
    pool.monomials.push_back(Monomial::unit());
    for (uint32_t d = 1; d <= std::min<uint32_t>(degree, nv); ++d) {
      std::function<void(size_t, uint32_t)> rec = [&](size_t start, uint32_t left) {
        if (left == 0) {
          std::vector<Variable> vs;
          for (size_t i : picks) vs.push_back(all_vars[i]);
          pool.monomials.push_back(Monomial(vs));
          return;
        }
        for (size_t i = start; i + left <= nv; ++i) {
          picks.push_back(i);
          rec(i + 1, left - 1);
          picks.pop_back();
        }
      };
      picks.clear();
      rec(0, d);
    }
    // the support-map properties are degree-free, so keep the variables and
    // axiom leads in the pool even when they exceed the degree under test
    for (const auto& v : all_vars) pool.monomials.push_back(Monomial::var(v));
    for (const auto& p : ctx.instance.polynomial_axioms())
      pool.monomials.push_back(ctx.monomial_order.leading_monomial(p));
    std::sort(pool.monomials.begin(), pool.monomials.end());
    pool.monomials.erase(std::unique(pool.monomials.begin(), pool.monomials.end()),
                         pool.monomials.end());
    return pool;
  }

  // biased seeds: 1, every variable, every axiom leading monomial
  pool.monomials.push_back(Monomial::unit());
  for (const auto& v : all_vars) pool.monomials.push_back(Monomial::var(v));
  for (const auto& p : ctx.instance.polynomial_axioms())
    pool.monomials.push_back(ctx.monomial_order.leading_monomial(p));

  // uniform draws over monomials of degree <= D: pick the degree with
  // probability proportional to the count, then a uniform subset
  std::vector<mpz_class> counts;
  binom = 1;
  for (uint32_t d = 0; d <= std::min<uint32_t>(degree, nv); ++d) {
    counts.push_back(binom);
    binom = binom * static_cast<unsigned long>(nv - d) / (d + 1);
  }
  Rng rng(seed);
  auto draw_mpz_below = [&](const mpz_class& bound) {
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    for (;;) {
      mpz_class r = 0;
      for (size_t got = 0; got < bits; got += 64) {
        r <<= 64;
        r += mpz_class(rng.next());
      }
      r %= mpz_class(1) << bits;
      if (r < bound) return r;
    }
  };
  for (uint64_t s = 0; s < samples; ++s) {
    mpz_class r = draw_mpz_below(total);
    uint32_t d = 0;
    while (r >= counts[d]) {
      r -= counts[d];
      ++d;
    }
    // uniform d-subset of the variables (partial Fisher-Yates)
    std::vector<size_t> idx(nv);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Variable> vs;
    for (uint32_t j = 0; j < d; ++j) {
      size_t pick = j + rng.below(nv - j);
      std::swap(idx[j], idx[pick]);
      vs.push_back(all_vars[idx[j]]);
    }
    pool.monomials.push_back(Monomial(vs));
  }
  std::sort(pool.monomials.begin(), pool.monomials.end());
  pool.monomials.erase(std::unique(pool.monomials.begin(), pool.monomials.end()),
                       pool.monomials.end());
  return pool;
}

// ---------------------------------------------------------------------------
// verifiers
// ---------------------------------------------------------------------------

namespace {

struct SampleOutcome {
  uint64_t checked = 0;
  uint64_t failures = 0;
  std::vector<Json> counterexamples;
};

void merge(CheckStat& stat, std::vector<Json>& sink, std::vector<SampleOutcome>& outcomes) {
  for (auto& o : outcomes) {
    stat.checked += o.checked;
    stat.failures += o.failures;
    for (auto& c : o.counterexamples) sink.push_back(std::move(c));
  }
}

}  // namespace

void verify_support(PseudoReducer& reducer, uint32_t degree, const MonomialPool& pool,
                    uint64_t seed, const VerifyOptions& options, FrameworkReport& report) {
  (void)degree;  // the support-map properties are degree-free
  const FrameworkContext& ctx = reducer.ctx();
  const auto& ord = ctx.monomial_order;
  const auto axioms = ctx.instance.polynomial_axioms();

  // item 3 plus the axiom-monomial claim: exact, over every axiom
  for (const auto& p : axioms) {
    Monomial lead = ord.leading_monomial(p);
    auto cl = reducer.closure_of(lead);
    report.support_item3.checked++;
    if (!subset_of(vertices_of_poly(p), cl)) {
      report.support_item3.failures++;
      report.counterexamples.push_back(
          Json{{"kind", "support_item3"}, {"axiom", p.to_string()}});
    }
    report.claim_axiom_monomials.checked++;
    bool ok = true;
    for (const auto& t : p.terms())
      if (!subset_of(reducer.closure_of(t.mono), cl)) ok = false;
    if (!ok) {
      report.claim_axiom_monomials.failures++;
      report.counterexamples.push_back(
          Json{{"kind", "claim_axiom_monomials"}, {"axiom", p.to_string()}});
    }
  }

  // sampled pair checks
  const auto& mons = pool.monomials;
  if (mons.empty()) return;
  uint64_t pair_checks = pool.exhaustive
                             ? std::min<uint64_t>(options.samples,
                                                  static_cast<uint64_t>(mons.size()) * 4)
                             : options.samples;

  std::vector<std::pair<size_t, size_t>> pairs;
  Rng rng(seed + 1);
  for (uint64_t i = 0; i < pair_checks; ++i)
    pairs.push_back({rng.below(mons.size()), rng.below(mons.size())});

  std::vector<Variable> all_vars;
  for (uint32_t v = 0; v < ctx.graph().n(); ++v)
    for (uint32_t i = 1; i <= ctx.k(); ++i) all_vars.push_back(Variable{v, i});
  size_t var_probe = std::min<size_t>(all_vars.size(), 12);
  std::vector<std::vector<Variable>> probe_vars(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (all_vars.size() <= var_probe) {
      probe_vars[i] = all_vars;
    } else {
      for (size_t j = 0; j < var_probe; ++j)
        probe_vars[i].push_back(all_vars[rng.below(all_vars.size())]);
    }
  }

  std::vector<SampleOutcome> item1(pairs.size()), item2(pairs.size()), multil(pairs.size());
  parallel_for(pairs.size(), options.jobs, [&](size_t i) {
    const Monomial& m = mons[pairs[i].first];
    const Monomial& mp = mons[pairs[i].second];
    auto cl_m = reducer.closure_of(m);
    auto cl_mp = reducer.closure_of(mp);

    // item 1: S(m') in S(m) forces S(xm') in S(xm)
    if (subset_of(cl_mp, cl_m)) {
      bool ok = true;
      Variable bad{};
      for (const auto& x : probe_vars[i]) {
        auto cl_xmp = reducer.closure_of(mp.times(x));
        auto cl_xm = reducer.closure_of(m.times(x));
        if (!subset_of(cl_xmp, cl_xm)) {
          ok = false;
          bad = x;
          break;
        }
      }
      item1[i].checked++;
      if (!ok) {
        item1[i].failures++;
        item1[i].counterexamples.push_back(Json{{"kind", "support_item1"},
                                                {"m", monomial_to_json(m)},
                                                {"m_prime", monomial_to_json(mp)},
                                                {"x", Json::array({bad.vertex, bad.colour})}});
      }
    }

    // item 2: vars(m') inside Vars(S(m)) forces S(m') in S(m)
    bool vars_inside = subset_of(vertices_of(mp), cl_m);
    if (vars_inside) {
      item2[i].checked++;
      if (!subset_of(cl_mp, cl_m)) {
        item2[i].failures++;
        item2[i].counterexamples.push_back(Json{{"kind", "support_item2"},
                                                {"m", monomial_to_json(m)},
                                                {"m_prime", monomial_to_json(mp)}});
      }
    }

    // multilinearity claim: vars(m') subset of vars(m)
    Monomial joint = m.times(mp);
    auto cl_joint = reducer.closure_of(joint);  // vars(m) covers vars(m')
    multil[i].checked++;
    if (!subset_of(cl_mp, cl_joint) || !subset_of(cl_m, cl_joint)) {
      multil[i].failures++;
      multil[i].counterexamples.push_back(Json{{"kind", "claim_multilinear"},
                                               {"m", monomial_to_json(m)},
                                               {"m_prime", monomial_to_json(mp)}});
    }
  });
  merge(report.support_item1, report.counterexamples, item1);
  merge(report.support_item2, report.counterexamples, item2);
  merge(report.claim_multilinear, report.counterexamples, multil);

  // reduction claim: monomials of R_{<S(m)>}(m) keep their support inside S(m)
  uint64_t reduction_checks = std::min<uint64_t>(mons.size(), options.samples / 4 + 1);
  std::vector<size_t> reduction_idx;
  Rng rng2(seed + 2);
  for (uint64_t i = 0; i < reduction_checks; ++i) reduction_idx.push_back(rng2.below(mons.size()));
  std::vector<SampleOutcome> redout(reduction_idx.size());
  parallel_for(reduction_idx.size(), options.jobs, [&](size_t i) {
    const Monomial& m = mons[reduction_idx[i]];
    auto cl_m = reducer.closure_of(m);
    Polynomial r = reducer.reduce_monomial(m);
    bool ok = true;
    for (const auto& t : r.terms())
      if (!subset_of(reducer.closure_of(t.mono), cl_m)) ok = false;
    redout[i].checked++;
    if (!ok) {
      redout[i].failures++;
      redout[i].counterexamples.push_back(
          Json{{"kind", "claim_reduction"}, {"m", monomial_to_json(m)}});
    }
  });
  merge(report.claim_reduction, report.counterexamples, redout);
}

void verify_conditions(PseudoReducer& reducer, uint32_t degree, const MonomialPool& pool,
                       uint64_t seed, const VerifyOptions& options, FrameworkReport& report) {
  const FrameworkContext& ctx = reducer.ctx();
  const auto& mons = pool.monomials;
  if (mons.empty()) return;

  // satisfiability condition: G[closure(m)] must be k-colourable
  std::vector<SampleOutcome> sat(mons.size());
  parallel_for(mons.size(), options.jobs, [&](size_t i) {
    if (mons[i].degree() > degree) return;
    auto cl = reducer.closure_of(mons[i]);
    sat[i].checked++;
    Graph sub = ctx.graph().induced(cl);
    bool colourable;
    try {
      colourable = is_k_colourable(sub, ctx.k(), options.colouring_budget).has_value();
    } catch (const ResourceError&) {
      colourable = false;  // cannot verify within budget: flag it
    }
    if (!colourable) {
      sat[i].failures++;
      Json cljson = Json::array();
      for (uint32_t v : cl) cljson.push_back(v);
      sat[i].counterexamples.push_back(Json{
          {"kind", "satisfiability"}, {"m", monomial_to_json(mons[i])}, {"closure", cljson}});
    }
  });
  merge(report.satisfiability, report.counterexamples, sat);

  // reducibility condition: irreducibility transfers between nested supports.
  // With a small exhaustive pool every ordered pair is checked outright, so a
  // false condition cannot hide behind the sampling; otherwise pairs are
  // drawn at random, with half the partners multiplied by a variable to
  // reach one degree above the pool.
  Rng rng(seed + 3);
  struct RedPair {
    Monomial m, mp;
  };
  std::vector<RedPair> pairs;
  std::vector<Variable> all_vars;
  for (uint32_t v = 0; v < ctx.graph().n(); ++v)
    for (uint32_t i = 1; i <= ctx.k(); ++i) all_vars.push_back(Variable{v, i});
  uint64_t full_budget = std::max<uint64_t>(options.samples * 8, 10000);
  if (pool.exhaustive && mons.size() * mons.size() <= full_budget) {
    for (const auto& m : mons)
      for (const auto& mp : mons) pairs.push_back({m, mp});
    for (uint64_t i = 0; i < options.samples && !all_vars.empty(); ++i) {
      Monomial m = mons[rng.below(mons.size())];
      Monomial mp = mons[rng.below(mons.size())].times(all_vars[rng.below(all_vars.size())]);
      pairs.push_back({std::move(m), std::move(mp)});
    }
  } else {
    for (uint64_t i = 0; i < options.samples; ++i) {
      Monomial m = mons[rng.below(mons.size())];
      Monomial mp = mons[rng.below(mons.size())];
      if (rng.below(2) == 0 && !all_vars.empty())
        mp = mp.times(all_vars[rng.below(all_vars.size())]);
      pairs.push_back({std::move(m), std::move(mp)});
    }
  }
  std::vector<SampleOutcome> red(pairs.size());
  parallel_for(pairs.size(), options.jobs, [&](size_t i) {
    if (pairs[i].m.degree() > degree) return;
    auto cl_m = reducer.closure_of(pairs[i].m);
    auto cl_mp = reducer.closure_of(pairs[i].mp);
    if (!subset_of(cl_mp, cl_m)) return;
    red[i].checked++;
    const GroebnerBasis& small = reducer.basis_for(cl_mp);
    const GroebnerBasis& big = reducer.basis_for(cl_m);
    if (small.is_reducible(pairs[i].mp) != big.is_reducible(pairs[i].mp)) {
      red[i].failures++;
      red[i].counterexamples.push_back(Json{{"kind", "reducibility"},
                                            {"m", monomial_to_json(pairs[i].m)},
                                            {"m_prime", monomial_to_json(pairs[i].mp)}});
    }
  });
  merge(report.reducibility, report.counterexamples, red);
}

void verify_pseudo_reduction(PseudoReducer& reducer, uint32_t degree, const MonomialPool& pool,
                             uint64_t seed, const VerifyOptions& options,
                             FrameworkReport& report) {
  const FrameworkContext& ctx = reducer.ctx();
  const Field& field = ctx.field();

  // R(1) = 1
  report.pr_one.checked++;
  if (reducer.reduce_monomial(Monomial::unit()) != Polynomial::one(field)) {
    report.pr_one.failures++;
    report.counterexamples.push_back(Json{{"kind", "pseudo_reduction_one"}});
  }

  // R(axiom) = 0 for axioms of degree <= D (Boolean axioms vanish structurally)
  const auto axioms = ctx.instance.polynomial_axioms();
  std::vector<SampleOutcome> axout(axioms.size());
  parallel_for(axioms.size(), options.jobs, [&](size_t i) {
    if (axioms[i].degree() > degree) return;
    axout[i].checked++;
    if (!reducer(axioms[i]).is_zero()) {
      axout[i].failures++;
      axout[i].counterexamples.push_back(
          Json{{"kind", "pseudo_reduction_axiom"}, {"axiom", axioms[i].to_string()}});
    }
  });
  merge(report.pr_axioms, report.counterexamples, axout);

  // R(x m) = R(x R(m)) for monomials of degree <= D-1
  std::vector<Monomial> small;
  for (const auto& m : pool.monomials)
    if (degree >= 1 && m.degree() <= static_cast<size_t>(degree - 1)) small.push_back(m);
  std::vector<Variable> all_vars;
  for (uint32_t v = 0; v < ctx.graph().n(); ++v)
    for (uint32_t i = 1; i <= ctx.k(); ++i) all_vars.push_back(Variable{v, i});
  Rng rng(seed + 4);
  struct CommutePair {
    Monomial m;
    Variable x;
  };
  std::vector<CommutePair> checks;
  if (pool.exhaustive && small.size() * all_vars.size() <= options.samples * 4) {
    for (const auto& m : small)
      for (const auto& x : all_vars) checks.push_back({m, x});
  } else if (!small.empty() && !all_vars.empty()) {
    for (uint64_t i = 0; i < options.samples; ++i)
      checks.push_back({small[rng.below(small.size())], all_vars[rng.below(all_vars.size())]});
  }
  std::vector<SampleOutcome> comm(checks.size());
  parallel_for(checks.size(), options.jobs, [&](size_t i) {
    const auto& [m, x] = checks[i];
    comm[i].checked++;
    Polynomial lhs = reducer(Polynomial::monomial(ctx.field(), m.times(x)));
    Polynomial rhs = reducer(reducer.reduce_monomial(m).times_variable(x));
    if (lhs != rhs) {
      comm[i].failures++;
      comm[i].counterexamples.push_back(Json{{"kind", "pseudo_reduction_commute"},
                                             {"m", monomial_to_json(m)},
                                             {"x", Json::array({x.vertex, x.colour})},
                                             {"lhs", lhs.to_string()},
                                             {"rhs", rhs.to_string()}});
    }
  });
  merge(report.pr_commute, report.counterexamples, comm);
}

FrameworkReport verify_framework(PseudoReducer& reducer, uint32_t degree,
                                 const VerifyOptions& options, uint64_t seed) {
  FrameworkReport report;
  report.degree = degree;
  report.seed = seed;
  report.samples = options.samples;
  MonomialPool pool = sample_monomial_pool(reducer.ctx(), degree, options.samples, seed,
                                           options.exhaustive_pool_limit);
  report.exhaustive = pool.exhaustive;
  verify_support(reducer, degree, pool, seed, options, report);
  verify_conditions(reducer, degree, pool, seed, options, report);
  verify_pseudo_reduction(reducer, degree, pool, seed, options, report);
  return report;
}

Json framework_report_to_json(const FrameworkReport& r) {
  auto stat = [](const CheckStat& s) {
    return Json{{"pass", s.pass()}, {"checked", s.checked}, {"failures", s.failures}};
  };
  Json j;
  j["degree"] = r.degree;
  j["support"] = Json{{"item1", r.support_item1.pass()},
                      {"item2", r.support_item2.pass()},
                      {"item3", r.support_item3.pass()}};
  j["satisfiability"] = r.satisfiability.pass();
  j["reducibility"] = r.reducibility.pass();
  j["pseudo_reduction"] = Json{{"r1", r.pr_one.pass()},
                               {"axioms", r.pr_axioms.pass()},
                               {"commute", r.pr_commute.pass()}};
  j["counterexamples"] = r.counterexamples;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["details"] = Json{{"exhaustive_pool", r.exhaustive},
                      {"support_item1", stat(r.support_item1)},
                      {"support_item2", stat(r.support_item2)},
                      {"support_item3", stat(r.support_item3)},
                      {"claim_axiom_monomials", stat(r.claim_axiom_monomials)},
                      {"claim_multilinear", stat(r.claim_multilinear)},
                      {"claim_reduction", stat(r.claim_reduction)},
                      {"satisfiability", stat(r.satisfiability)},
                      {"reducibility", stat(r.reducibility)},
                      {"pseudo_reduction_one", stat(r.pr_one)},
                      {"pseudo_reduction_axioms", stat(r.pr_axioms)},
                      {"pseudo_reduction_commute", stat(r.pr_commute)}};
  return j;
}

// ---------------------------------------------------------------------------
// star colouring and rho
// ---------------------------------------------------------------------------

std::map<uint32_t, uint32_t> star_colouring(const Graph& g, const std::vector<uint32_t>& u_set,
                                            const std::vector<uint32_t>& w_set, uint32_t delta,
                                            const ColouringBudget& budget) {
  std::vector<uint32_t> u_sorted = u_set, w_sorted = w_set;
  std::sort(u_sorted.begin(), u_sorted.end());
  std::sort(w_sorted.begin(), w_sorted.end());
  require(subset_of(w_sorted, u_sorted), "W must be a subset of U");
  require(!find_hop_or_lasso(g, w_sorted).has_value(),
          "W admits a hop or lasso; the star structure is broken");

  std::vector<char> in_u(g.n(), 0), in_w(g.n(), 0);
  for (uint32_t v : u_sorted) in_u[v] = 1;
  for (uint32_t v : w_sorted) in_w[v] = 1;

  // boundary: vertices of U \ W adjacent to W
  std::vector<uint32_t> boundary;
  for (uint32_t v : u_sorted) {
    if (in_w[v]) continue;
    for (uint32_t w : g.neighbours(v)) {
      if (in_w[w]) {
        boundary.push_back(v);
        break;
      }
    }
  }
  std::vector<char> is_boundary(g.n(), 0);
  for (uint32_t v : boundary) is_boundary[v] = 1;

  // boundary degree precondition
  for (uint32_t u : boundary) {
    uint32_t deg_inside = 0;
    for (uint32_t w : g.neighbours(u))
      if (in_u[w] && !in_w[w]) ++deg_inside;
    require(deg_inside <= delta, "boundary vertex exceeds the degree bound delta");
  }

  // stars: a boundary vertex plus its neighbours in U \ W; closedness makes
  // the leaf sets independent and the stars pairwise disjoint
  std::vector<int64_t> star_of(g.n(), -1);
  for (size_t b = 0; b < boundary.size(); ++b) {
    uint32_t u = boundary[b];
    require(star_of[u] < 0, "boundary stars are not pairwise disjoint");
    star_of[u] = static_cast<int64_t>(b);
    for (uint32_t w : g.neighbours(u)) {
      if (!in_u[w] || in_w[w]) continue;
      require(star_of[w] < 0, "boundary stars are not pairwise disjoint");
      star_of[w] = static_cast<int64_t>(b);
    }
  }

  // contract each star inside G[U \ W]
  std::vector<uint32_t> rest;
  for (uint32_t v : u_sorted)
    if (!in_w[v]) rest.push_back(v);
  std::vector<uint32_t> label(g.n(), 0);
  uint32_t classes = static_cast<uint32_t>(boundary.size());
  for (uint32_t v : rest)
    label[v] = star_of[v] >= 0 ? static_cast<uint32_t>(star_of[v]) : classes++;
  Graph quotient(classes);
  for (auto [a, b] : g.edges()) {
    if (!in_u[a] || !in_u[b] || in_w[a] || in_w[b]) continue;
    if (label[a] == label[b]) {
      // an edge inside a star's leaves would be a lasso
      require(star_of[a] >= 0 && (star_of[a] == star_of[b]) &&
                  (static_cast<uint32_t>(a) == boundary[star_of[a]] ||
                   static_cast<uint32_t>(b) == boundary[star_of[b]]),
              "edge inside a contracted class");
      continue;
    }
    quotient.add_edge(label[a], label[b]);
  }

  auto colouring = is_k_colourable(quotient, 3, budget);
  if (!colouring) {
    std::vector<uint32_t> bad = rest;
    throw UncolourableError("star contraction is not 3-colourable", std::move(bad));
  }

  std::map<uint32_t, uint32_t> result;
  for (uint32_t v : rest) {
    if (is_boundary[v]) continue;  // boundary vertices stay uncoloured
    result[v] = (*colouring)[label[v]];
  }

  // post-verify: proper on the far region, monochromatic star leaves
  for (auto [a, b] : g.edges()) {
    auto ia = result.find(a);
    auto ib = result.find(b);
    if (ia != result.end() && ib != result.end())
      check_invariant(ia->second != ib->second, "star colouring is not proper");
  }
  for (uint32_t u : boundary) {
    int64_t seen = -1;
    for (uint32_t w : g.neighbours(u)) {
      if (!in_u[w] || in_w[w] || is_boundary[w]) continue;
      auto it = result.find(w);
      check_invariant(it != result.end(), "star leaf missed by the colouring");
      if (seen < 0) seen = it->second;
      check_invariant(seen == static_cast<int64_t>(it->second),
                      "star leaves are not monochromatic");
    }
  }
  return result;
}

std::map<Variable, Polynomial> substitution_rho(const FrameworkContext& ctx,
                                                const std::vector<uint32_t>& u_set,
                                                const std::vector<uint32_t>& w_set,
                                                const ColouringBudget& budget) {
  const Graph& g = ctx.graph();
  const Field& field = ctx.field();
  uint32_t k = ctx.k();
  std::vector<uint32_t> u_sorted = u_set, w_sorted = w_set;
  std::sort(u_sorted.begin(), u_sorted.end());
  std::sort(w_sorted.begin(), w_sorted.end());
  require(is_closed(g, ctx.vertex_order, w_sorted), "W is not closed");

  auto chi = star_colouring(g, u_sorted, w_sorted, ctx.delta, budget);

  std::vector<char> in_u(g.n(), 0), in_w(g.n(), 0);
  for (uint32_t v : u_sorted) in_u[v] = 1;
  for (uint32_t v : w_sorted) in_w[v] = 1;

  std::map<Variable, Polynomial> rho;
  for (uint32_t v : u_sorted) {
    if (in_w[v]) continue;  // W variables are untouched
    std::vector<uint32_t> w_neighbours;
    for (uint32_t w : g.neighbours(v))
      if (in_w[w]) w_neighbours.push_back(w);

    if (w_neighbours.empty()) {
      // far vertex: pin to the star colouring
      auto it = chi.find(v);
      check_invariant(it != chi.end(), "far vertex missed by the star colouring");
      uint32_t colour = it->second;
      require(colour <= k, "star colour exceeds the palette; k < 3 unsupported here");
      for (uint32_t i = 1; i <= k; ++i)
        rho.emplace(Variable{v, i}, i == colour ? Polynomial::one(field)
                                                : Polynomial::zero(field));
      continue;
    }
    require(w_neighbours.size() == 1,
            "boundary vertex with two W-neighbours: a 2-hop exists, W not closed");
    uint32_t wv = w_neighbours[0];

    // the star colour blocking u, if any
    std::optional<uint32_t> blocked;
    for (uint32_t x : g.neighbours(v)) {
      if (!in_u[x] || in_w[x]) continue;
      auto it = chi.find(x);
      if (it == chi.end()) continue;
      check_invariant(!blocked || *blocked == it->second, "star leaves not monochromatic");
      blocked = it->second;
    }
    std::vector<uint32_t> available;
    for (uint32_t i = 1; i <= k; ++i)
      if (!blocked || *blocked != i) available.push_back(i);
    require(available.size() >= 2, "fewer than two free colours for a boundary vertex");
    uint32_t c1 = available[0], c2 = available[1];

    for (uint32_t i = 1; i <= k; ++i) {
      if (i == c1) {
        rho.emplace(Variable{v, i}, Polynomial::variable(field, Variable{wv, c2}));
      } else if (i == c2) {
        std::vector<Term> terms;
        for (uint32_t j = 1; j <= k; ++j)
          if (j != c2) terms.push_back({Monomial::var(Variable{wv, j}), field.one()});
        rho.emplace(Variable{v, i}, Polynomial(field, std::move(terms)));
      } else {
        rho.emplace(Variable{v, i}, Polynomial::zero(field));
      }
    }
  }
  return rho;
}

// ---------------------------------------------------------------------------
// predictions
// ---------------------------------------------------------------------------

mpq_class predict_degree(const mpq_class& l, uint32_t delta, uint32_t c, uint64_t t_delta_size) {
  require(c >= 1, "c must be >= 1");
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), delta, c - 1);
  mpq_class denom = 50 * mpq_class(power);
  mpq_class result = l / denom - mpq_class(static_cast<unsigned long>(t_delta_size));
  result.canonicalize();
  return result;
}

mpq_class implied_size_exponent(const mpq_class& refutation_degree, const mpq_class& axiom_degree,
                                uint64_t n_variables) {
  require(n_variables > 0, "variable count must be positive");
  mpq_class diff = refutation_degree - axiom_degree;
  mpq_class result = diff * diff / mpq_class(static_cast<unsigned long>(n_variables));
  result.canonicalize();
  return result;
}

std::string regular_degree_form(uint32_t d) {
  return "d^(-C*d) * n with d = " + std::to_string(d) +
         " and C an unresolved absolute constant";
}

}  // namespace pclab
