// Acceptance suite: one check per shipped guarantee, one PASS/FAIL line each.
// Every tolerance is pinned in code; a nonzero exit means at least one
// criterion failed. Runs standalone (no framework) so the output reads as a
// report.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "pclab/closure.hpp"
#include "pclab/colouring.hpp"
#include "pclab/encode.hpp"
#include "pclab/framework.hpp"
#include "pclab/graph.hpp"
#include "pclab/groebner.hpp"
#include "pclab/pc_prover.hpp"
#include "pclab/random_graph.hpp"
#include "pclab/resgame.hpp"
#include "pclab/rng.hpp"
#include "pclab/sparsity.hpp"
#include "support/oracles.hpp"

using namespace pclab;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

std::vector<Criterion> results;

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  results.push_back({id, name, pass, detail, seconds});
  std::printf("criterion %2d %s  %s: %s (%.1fs)\n", id, pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str(), seconds);
  std::fflush(stdout);
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Graph complete_graph(uint32_t n) {
  Graph g(n);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(uint32_t n) {
  Graph g(n);
  for (uint32_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph relabelled(const Graph& g, uint64_t seed) {
  std::vector<uint32_t> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(seed);
  rng.shuffle(perm);
  Graph h(g.n());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph with_isolated(const Graph& g, uint32_t extra) {
  Graph h(g.n() + extra);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  return h;
}

Field field_by_index(int i) {
  switch (i % 3) {
    case 0: return Field::prime(2);
    case 1: return Field::prime(5);
    default: return Field::rationals();
  }
}

// -------------------------------------------------------------------------
// 1. membership vs the vanish-on-all-roots oracle, three fields
// -------------------------------------------------------------------------
void criterion_1() {
  auto start = std::chrono::steady_clock::now();
  const std::pair<uint32_t, uint32_t> shapes[] = {{4, 3}, {3, 3}, {4, 2}, {6, 2}};
  uint64_t checked = 0, agreements = 0;
  for (int fi = 0; fi < 3; ++fi) {
    Field f = field_by_index(fi);
    Rng rng(10'000 + fi);
    for (int trial = 0; trial < 500; ++trial) {
      auto [nv, nc] = shapes[trial % 4];
      std::vector<Variable> vars;
      for (uint32_t v = 0; v < nv; ++v)
        for (uint32_t c = 1; c <= nc; ++c) vars.push_back(Variable{v, c});
      std::vector<Polynomial> gens;
      size_t n_gens = 1 + rng.below(4);
      for (size_t i = 0; i < n_gens; ++i)
        gens.push_back(oracle::random_polynomial(f, vars, rng, 4, 3));
      GroebnerBasis gb(gens, MonomialOrder::identity(nv, nc), f);
      Polynomial g = oracle::random_polynomial(f, vars, rng, 4, 3);
      ++checked;
      if (ideal_membership(g, gb) == oracle::vanishes_on_common_roots(g, gens)) ++agreements;
    }
  }
  double secs = elapsed(start);
  bool pass = agreements == checked && checked >= 1500 && secs <= 120.0;
  std::ostringstream detail;
  detail << agreements << "/" << checked
         << " agreements over GF(2), GF(5), Q with <= 12 variables";
  report(1, "implication equals ideal membership", pass, detail.str(), secs);
}

// -------------------------------------------------------------------------
// 2. reduction-operator laws, 1000 randomized trials each
// -------------------------------------------------------------------------
void criterion_2() {
  auto start = std::chrono::steady_clock::now();
  uint64_t linearity = 0, idempotence = 0, difference = 0, nested = 0;
  const uint64_t trials = 1000;
  Rng rng(20'000);
  for (uint64_t trial = 0; trial < trials; ++trial) {
    Field f = field_by_index(static_cast<int>(trial));
    std::vector<Variable> vars;
    for (uint32_t v = 0; v < 3; ++v)
      for (uint32_t c = 1; c <= 2; ++c) vars.push_back(Variable{v, c});
    std::vector<Polynomial> g1;
    g1.push_back(oracle::random_polynomial(f, vars, rng, 3, 2));
    if (rng.below(2)) g1.push_back(oracle::random_polynomial(f, vars, rng, 3, 2));
    std::vector<Polynomial> g2 = g1;
    g2.push_back(oracle::random_polynomial(f, vars, rng, 3, 2));

    MonomialOrder ord = MonomialOrder::identity(3, 2);
    GroebnerBasis i1(g1, ord, f);
    GroebnerBasis i2(g2, ord, f);

    Polynomial p = oracle::random_polynomial(f, vars, rng, 4, 3);
    Polynomial q = oracle::random_polynomial(f, vars, rng, 4, 3);
    Scalar a = f.from_int(static_cast<long>(rng.below(7)) - 3);
    Scalar b = f.from_int(static_cast<long>(rng.below(7)) - 3);

    if (i1.reduce(p.scale(a).add(q.scale(b))) == i1.reduce(p).scale(a).add(i1.reduce(q).scale(b)))
      ++linearity;
    if (i1.reduce(i1.reduce(p)) == i1.reduce(p)) ++idempotence;
    if (oracle::vanishes_on_common_roots(p.sub(i1.reduce(p)), g1)) ++difference;

    std::vector<Variable> mv, mv2;
    for (int i = 0; i < 2; ++i) mv.push_back(vars[rng.below(vars.size())]);
    for (int i = 0; i < 2; ++i) mv2.push_back(vars[rng.below(vars.size())]);
    Polynomial m = Polynomial::monomial(f, Monomial(mv));
    if (i2.reduce(i1.reduce(m).times_monomial(Monomial(mv2), f.one())) ==
        i2.reduce(m.times_monomial(Monomial(mv2), f.one())))
      ++nested;
  }
  double secs = elapsed(start);
  bool pass = linearity == trials && idempotence == trials && difference == trials &&
              nested == trials && secs <= 120.0;
  std::ostringstream detail;
  detail << "linearity " << linearity << "/" << trials << ", idempotence " << idempotence << "/"
         << trials << ", p-R(p) in ideal " << difference << "/" << trials << ", nested-ideal "
         << nested << "/" << trials;
  report(2, "reduction-operator laws", pass, detail.str(), secs);
}

// -------------------------------------------------------------------------
// 3. closure equals the unique minimal closed superset, exhaustively
// -------------------------------------------------------------------------
void criterion_3() {
  auto start = std::chrono::steady_clock::now();
  Rng rng(30'000);
  uint64_t graphs = 0, sets = 0, failures = 0, non_unique = 0;
  for (int trial = 0; trial < 200; ++trial) {
    uint32_t n = 5 + rng.below(4);  // 5..8 vertices
    Graph g = oracle::random_graph(n, 20 + rng.below(40), rng);
    std::vector<uint32_t> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 0);
    rng.shuffle(ranks);
    VertexOrder ord(ranks);
    ++graphs;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) > 4) continue;
      std::vector<uint32_t> u;
      for (uint32_t v = 0; v < n; ++v)
        if (mask & (1u << v)) u.push_back(v);
      auto minimal = oracle::minimal_closed_supersets(g, ord, u);
      ++sets;
      if (minimal.size() != 1) {
        ++non_unique;
        continue;
      }
      if (closure(g, ord, u) != minimal[0]) ++failures;
    }
  }
  double secs = elapsed(start);
  bool pass = failures == 0 && non_unique == 0 && graphs >= 200 && secs <= 300.0;
  std::ostringstream detail;
  detail << graphs << " graphs, " << sets << " seed sets; mismatches " << failures
         << ", uniqueness violations " << non_unique;
  report(3, "closure equals the exhaustive oracle", pass, detail.str(), secs);
}

// -------------------------------------------------------------------------
// 4. witness bound |Z| <= 25|U| with Desc(Z) = closure(U) on sparse samples
// -------------------------------------------------------------------------
void criterion_4() {
  auto start = std::chrono::steady_clock::now();
  Rng rng(40'000);
  uint64_t graphs = 0, tested = 0, failures = 0;
  for (int i = 0; i < 20; ++i) {
    uint32_t n = 150 + 25 * i;  // up to 625 vertices
    Graph g = sample_regular(n, 2, 41'000 + i);
    FrameworkContext ctx = build_context(g, 3, Field::prime(2), 3);
    uint32_t a = std::max(2u, ctx.c);
    mpq_class eps(1, 3 * a);

    // the letter of the bound: verified sparse at l = 12 ...
    if (!check_sparsity(g, 12, eps).sparse) continue;
    // ... and since 12/(25a) < 1 would make the claim vacuous, verify the
    // full range l = n as well (2-regular graphs are (n, eps)-sparse) and
    // test seed sets up to n/(25a)
    if (!check_sparsity(g, n, eps).sparse) continue;
    ++graphs;

    uint64_t max_u = std::max<uint64_t>(1, n / (25 * a));
    for (int t = 0; t < 25; ++t) {
      std::vector<uint32_t> u;
      size_t size = 1 + rng.below(max_u);
      for (size_t j = 0; j < size; ++j) u.push_back(uint32_t(rng.below(g.n())));
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      auto res = closure_with_witness(g, ctx.vertex_order, u);
      ++tested;
      bool ok = res.witness.size() <= 25 * u.size() &&
                descendants(g, ctx.vertex_order, res.witness) == res.closure;
      if (!ok) ++failures;
    }
  }
  double secs = elapsed(start);
  bool pass = graphs >= 20 && failures == 0;
  std::ostringstream detail;
  detail << graphs << " sparse-verified 2-regular graphs, " << tested
         << " seed sets; violations " << failures;
  report(4, "closure witness bound |Z| <= 25|U|", pass, detail.str(), secs);
}

// -------------------------------------------------------------------------
// 5. star colouring: proper and monochromatic on every valid configuration
// -------------------------------------------------------------------------
void criterion_5() {
  auto start = std::chrono::steady_clock::now();
  Rng rng(50'000);
  uint64_t runs = 0, failures = 0, skipped = 0;

  auto try_config = [&](const Graph& g, const FrameworkContext& ctx, uint32_t delta) {
    std::vector<uint32_t> w0{uint32_t(rng.below(g.n()))};
    auto w = closure(g, ctx.vertex_order, w0);
    std::vector<uint32_t> u = w;
    size_t extras = 5 + rng.below(16);
    for (size_t j = 0; j < extras; ++j) u.push_back(uint32_t(rng.below(g.n())));
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    std::map<uint32_t, uint32_t> chi;
    try {
      chi = star_colouring(g, u, w, delta);
    } catch (const DomainError&) {
      ++skipped;  // preconditions violated by this draw
      return;
    }
    ++runs;
    // re-verify properness and monochromaticity from scratch
    std::vector<char> in_u(g.n(), 0), in_w(g.n(), 0);
    for (uint32_t v : u) in_u[v] = 1;
    for (uint32_t v : w) in_w[v] = 1;
    for (auto [x, y] : g.edges()) {
      auto ix = chi.find(x);
      auto iy = chi.find(y);
      if (ix != chi.end() && iy != chi.end() && ix->second == iy->second) ++failures;
    }
    for (uint32_t v : u) {
      if (in_w[v]) continue;
      bool is_boundary = false;
      for (uint32_t x : g.neighbours(v))
        if (in_w[x]) is_boundary = true;
      if (!is_boundary) continue;
      int64_t seen = -1;
      for (uint32_t x : g.neighbours(v)) {
        if (!in_u[x] || in_w[x]) continue;
        auto it = chi.find(x);
        if (it == chi.end()) continue;
        if (seen >= 0 && seen != int64_t(it->second)) ++failures;
        seen = it->second;
      }
    }
  };

  // unions of cycles: sparse at every scale
  for (uint64_t seed = 0; seed < 6; ++seed) {
    Graph g = sample_regular(60, 2, 51'000 + seed);
    FrameworkContext ctx = build_context(g, 3, Field::prime(2), 3);
    for (int t = 0; t < 6; ++t) try_config(g, ctx, 2);
  }
  // small random graphs, exhaustively verified sparse first
  uint64_t seed = 52'000;
  int accepted = 0;
  while (accepted < 5 && seed < 52'200) {
    Graph g = sample_gnp(18, 2.0 / 18, seed++);
    if (!check_sparsity(g, 18, mpq_class(1, 6)).sparse) continue;
    ++accepted;
    FrameworkContext ctx = build_context(g, 3, Field::prime(2), 4);
    for (int t = 0; t < 4; ++t) try_config(g, ctx, 4);
  }
  double secs = elapsed(start);
  bool pass = failures == 0 && runs >= 40;
  std::ostringstream detail;
  detail << runs << " colourings verified proper and monochromatic, " << skipped
         << " draws skipped on preconditions; failures " << failures;
  report(5, "star colouring of the boundary region", pass, detail.str(), secs);
}

// -------------------------------------------------------------------------
// 6. framework green at D implies refutation degree > D; K4 converse
// -------------------------------------------------------------------------
//
// Degree 0 is the only degree at which unsatisfiable instances of this size
// can be fully green. With two colours the reducibility condition is false
// at degree 1 on any graph with a path (endpoint colours of an induced path
// are congruent modulo the path ideal, so irreducibility does not transfer
// from a single-vertex support), and with three or more colours an
// unsatisfiable instance on <= 8 vertices has a dense chromatic core whose
// closures are not k-colourable, killing the satisfiability condition. Both
// obstructions are demonstrated below rather than sampled around: the
// detector must find the k=2 reducibility failure at degree 1, and the K4
// satisfiability failure at degree 2.
void criterion_6() {
  auto start = std::chrono::steady_clock::now();
  struct Instance {
    std::string name;
    Graph graph;
    Field field;
  };
  std::vector<Instance> instances;
  instances.push_back({"C9/gf2", cycle_graph(9), Field::prime(2)});
  instances.push_back({"C9/gf5", cycle_graph(9), Field::prime(5)});
  instances.push_back({"C9/q", cycle_graph(9), Field::rationals()});
  instances.push_back({"C11/gf2", cycle_graph(11), Field::prime(2)});
  instances.push_back({"C11/q", cycle_graph(11), Field::rationals()});
  instances.push_back({"C9-perm1/gf2", relabelled(cycle_graph(9), 61'001), Field::prime(2)});
  instances.push_back({"C9-perm2/gf5", relabelled(cycle_graph(9), 61'002), Field::prime(5)});
  instances.push_back({"C11-perm3/gf2", relabelled(cycle_graph(11), 61'003), Field::prime(2)});
  instances.push_back({"C9+2iso/q", with_isolated(cycle_graph(9), 2), Field::rationals()});
  instances.push_back({"C9+3iso/gf2", with_isolated(cycle_graph(9), 3), Field::prime(2)});
  instances.push_back({"C11+1iso/gf5", with_isolated(cycle_graph(11), 1), Field::prime(5)});

  const uint32_t degree = 0;
  uint64_t green = 0, consistent = 0;
  bool detector_ok = true;
  std::ostringstream flow;
  std::optional<uint32_t> min_seen;
  for (const auto& inst : instances) {
    FrameworkContext ctx = build_context(inst.graph, 2, inst.field, 3);
    PseudoReducer reducer(ctx);
    VerifyOptions options;
    options.samples = 500;
    options.jobs = 4;
    FrameworkReport rep = verify_framework(reducer, degree, options, 60'000);
    bool unsat = !is_k_colourable(inst.graph, 2).has_value();
    if (!(rep.all_pass() && unsat)) {
      flow << " [" << inst.name << ": not green+unsat]";
      continue;
    }
    ++green;
    auto min = min_refutation_degree(ctx.instance.polynomial_axioms(), inst.field,
                                     ctx.monomial_order,
                                     static_cast<uint32_t>(ctx.instance.n_variables()));
    if (min && *min > degree) {
      ++consistent;
      min_seen = *min;
    } else {
      flow << " [" << inst.name << ": min degree not above " << degree << "]";
    }

    // the degree-1 run must detect the genuine two-colour reducibility
    // failure, so greens are not a rubber stamp
    FrameworkReport r1 = verify_framework(reducer, 1, options, 60'000);
    if (r1.reducibility.pass()) {
      detector_ok = false;
      flow << " [" << inst.name << ": degree-1 reducibility failure missed]";
    }
  }

  // converse: on K4 with three colours the satisfiability condition fails,
  // and the minimum refutation degree is still found
  FrameworkContext k4ctx = build_context(complete_graph(4), 3, Field::rationals(), 5);
  PseudoReducer k4reducer(k4ctx);
  VerifyOptions options;
  options.samples = 300;
  FrameworkReport k4rep = verify_framework(k4reducer, 2, options, 60'001);
  bool k4_sat_fails = !k4rep.satisfiability.pass();
  auto k4min = min_refutation_degree(k4ctx.instance.polynomial_axioms(), Field::rationals(),
                                     k4ctx.monomial_order, 12);
  bool k4_min_found = k4min.has_value();

  double secs = elapsed(start);
  bool pass = green >= 10 && consistent == green && detector_ok && k4_sat_fails &&
              k4_min_found && secs <= 1200.0;
  std::ostringstream detail;
  detail << green << "/" << instances.size() << " instances green+unsat at degree " << degree
         << ", all " << consistent << " have refutation degree "
         << (min_seen ? std::to_string(*min_seen) : "-") << " > " << degree
         << "; degree-1 reducibility failures detected on all; K4 satisfiability fails and min "
            "degree "
         << (k4min ? std::to_string(*k4min) : "-") << " found" << flow.str();
  report(6, "framework green implies degree lower bound", pass, detail.str(), secs);
}

// -------------------------------------------------------------------------
// 7. the boundary substitution maps Col(G[U]) into the ideal of Col(G[W])
// -------------------------------------------------------------------------
void criterion_7() {
  auto start = std::chrono::steady_clock::now();
  Rng rng(70'000);
  uint64_t configs = 0, axioms_checked = 0, failures = 0, order_failures = 0, skipped = 0;
  for (uint64_t round = 0; round < 24; ++round) {
    uint32_t k = round % 3 == 2 ? 4 : 3;
    Field f = field_by_index(static_cast<int>(round));
    Graph g = sample_regular(48, 2, 71'000 + round);
    FrameworkContext ctx = build_context(g, k, f, 3);
    std::vector<uint32_t> w0{uint32_t(rng.below(g.n()))};
    auto w = closure(g, ctx.vertex_order, w0);
    std::vector<uint32_t> u = w;
    size_t extras = 4 + rng.below(10);
    for (size_t j = 0; j < extras; ++j) u.push_back(uint32_t(rng.below(g.n())));
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());

    std::map<Variable, Polynomial> rho;
    try {
      rho = substitution_rho(ctx, u, w);
    } catch (const DomainError&) {
      ++skipped;
      continue;
    }
    ++configs;
    GroebnerBasis w_ideal(col_axioms_on_vertices(g, k, f, w), ctx.monomial_order, f);
    for (const auto& p : col_axioms_on_vertices(g, k, f, u)) {
      ++axioms_checked;
      if (!w_ideal.contains(p.substitute(rho))) ++failures;
    }
    for (const auto& [v, image] : rho)
      for (const auto& t : image.terms())
        if (ctx.monomial_order.compare(t.mono, Monomial::var(v)) != Cmp::less) ++order_failures;
  }
  double secs = elapsed(start);
  bool pass = failures == 0 && order_failures == 0 && configs >= 20;
  std::ostringstream detail;
  detail << configs << " configurations, " << axioms_checked << " axiom images in the W-ideal; "
         << failures << " membership failures, " << order_failures << " order violations, "
         << skipped << " draws skipped";
  report(7, "substitution maps axioms into the sub-ideal", pass, detail.str(), secs);
}

// -------------------------------------------------------------------------
// 8. resolution width game: the adversary survives on sparse graphs
// -------------------------------------------------------------------------
void criterion_8() {
  auto start = std::chrono::steady_clock::now();
  const uint64_t rounds = 10'000;
  uint64_t instances = 0, survived = 0;
  std::ostringstream flow;

  auto run_instance = [&](const std::string& name, const Graph& g, uint32_t l) {
    if (!check_sparsity(g, l, mpq_class(9, 20)).sparse) {
      flow << " [" << name << ": not sparse]";
      return;
    }
    uint32_t width = l / 4;
    ++instances;
    auto greedy = play(g, 4, width, ProverKind::greedy_conflict, rounds, 80'000);
    auto random = play(g, 4, width, ProverKind::random, rounds, 80'001);
    if (greedy.adversary_survived && random.adversary_survived) {
      ++survived;
    } else {
      flow << " [" << name << ": prover won]";
    }
  };

  for (uint64_t seed = 0; seed < 6; ++seed)
    run_instance("2reg-48-" + std::to_string(seed), sample_regular(48, 2, 81'000 + seed), 48);
  uint64_t seed = 82'000;
  int accepted = 0;
  while (accepted < 4 && seed < 82'100) {
    Graph g = sample_gnp(24, 2.0 / 24, seed++);
    if (!check_sparsity(g, 12, mpq_class(9, 20)).sparse) continue;
    ++accepted;
    run_instance("gnp24-" + std::to_string(seed - 1), g, 12);
  }

  // the greedy prover wins on K5 with four colours
  auto k5 = play(complete_graph(5), 4, 5, ProverKind::greedy_conflict, 100, 80'002);
  bool k5_won = !k5.adversary_survived && k5.witness.has_value() &&
                witness_is_improper(complete_graph(5), 4, *k5.witness);

  double secs = elapsed(start);
  bool pass = instances >= 10 && survived == instances && k5_won && secs <= 300.0;
  std::ostringstream detail;
  detail << survived << "/" << instances
         << " sparse instances survive 10^4 rounds against both provers at width l/4; "
         << "greedy prover " << (k5_won ? "wins" : "does not win") << " on K5" << flow.str();
  report(8, "resolution width game", pass, detail.str(), secs);
}

// -------------------------------------------------------------------------
// 9. sampler statistics
// -------------------------------------------------------------------------
void criterion_9() {
  auto start = std::chrono::steady_clock::now();

  // gnp: mean edge count within 3 standard errors over 200 seeds
  const uint32_t n = 2000;
  const double p = 6.0 / n;
  double total = 0;
  for (uint64_t seed = 0; seed < 200; ++seed) total += sample_gnp(n, p, 5000 + seed).m();
  double mean = total / 200;
  double expect = (double(n) * (n - 1) / 2) * p;
  double se = std::sqrt(expect * (1 - p) / 200);
  bool gnp_ok = std::abs(mean - expect) <= 3 * se;

  // regular: always d-regular (also verified on construction), plus the
  // exact 6:1 isomorphism-class ratio for n=6, d=2 at the 0.1% level
  bool regular_ok = true;
  for (auto [rn, rd] : {std::pair<uint32_t, uint32_t>{12, 3}, {16, 4}, {21, 2}}) {
    Graph g = sample_regular(rn, rd, 90'000 + rn);
    for (uint32_t v = 0; v < rn; ++v)
      if (g.degree(v) != rd) regular_ok = false;
  }
  uint64_t sixcycle = 0, triangles = 0;
  const uint64_t samples = 100'000;
  for (uint64_t seed = 0; seed < samples; ++seed) {
    Graph g = sample_regular(6, 2, 91'000'000 + seed);
    bool tri = false;
    for (uint32_t u = 0; u < 6 && !tri; ++u)
      for (uint32_t v : g.neighbours(u))
        for (uint32_t w : g.neighbours(v))
          if (w != u && g.has_edge(w, u)) tri = true;
    (tri ? triangles : sixcycle)++;
  }
  // exact class sizes by enumeration: 5!/2 = 60 labelled 6-cycles and
  // C(6,3)/2 = 10 triangle pairs, so the expected split is 6/7 vs 1/7
  double e6 = samples * 6.0 / 7.0, e3 = samples / 7.0;
  double chi2 = (sixcycle - e6) * (sixcycle - e6) / e6 + (triangles - e3) * (triangles - e3) / e3;
  bool chi_ok = chi2 <= 10.828;  // 0.1% level, one degree of freedom

  double secs = elapsed(start);
  bool pass = gnp_ok && regular_ok && chi_ok;
  std::ostringstream detail;
  detail.precision(4);
  detail << "gnp mean " << mean << " vs " << expect << " (|dev| " << std::abs(mean - expect)
         << " <= 3se = " << 3 * se << "); 6:1 class split " << sixcycle << ":" << triangles
         << ", chi2 " << chi2 << " <= 10.828";
  report(9, "sampler statistics", pass, detail.str(), secs);
}

// -------------------------------------------------------------------------
// 10. closed-form degree and size-exponent arithmetic, exact rationals
// -------------------------------------------------------------------------
void criterion_10() {
  auto start = std::chrono::steady_clock::now();
  struct DegreeCase {
    unsigned long l;
    uint32_t delta, c;
    uint64_t t;
    mpq_class expect;
  };
  // expectations written out as l/(50*delta^(c-1)) - t
  std::vector<DegreeCase> degree_cases = {
      {5000, 6, 4, 0, mpq_class(25, 54)},
      {5000, 6, 4, 1, mpq_class(25, 54) - 1},
      {100, 2, 3, 0, mpq_class(1, 2)},
      {100, 2, 3, 1, mpq_class(-1, 2)},
      {1, 1, 1, 0, mpq_class(1, 50)},
      {1000, 3, 4, 2, mpq_class(1000, 1350) - 2},
      {720, 6, 2, 0, mpq_class(720, 300)},
      {50, 5, 3, 0, mpq_class(50, 1250)},
      {49, 7, 5, 3, mpq_class(49, 120050) - 3},
      {123456, 2, 10, 7, mpq_class(123456, 25600) - 7},
  };
  uint64_t checked = 0, failures = 0;
  for (const auto& dc : degree_cases) {
    ++checked;
    mpq_class got = predict_degree(mpq_class(dc.l), dc.delta, dc.c, dc.t);
    mpq_class want = dc.expect;
    want.canonicalize();
    if (!(got == want)) ++failures;
  }

  struct SizeCase {
    mpq_class big_d, d;
    uint64_t n;
    mpq_class expect;
  };
  std::vector<SizeCase> size_cases = {
      {mpq_class(7), mpq_class(7), 50, mpq_class(0)},
      {mpq_class(10), mpq_class(2), 16, mpq_class(4)},
      {mpq_class(1, 2), mpq_class(0), 2, mpq_class(1, 8)},
      {mpq_class(25, 54), mpq_class(2), 27, mpq_class(6889, 78732)},
      {mpq_class(100), mpq_class(3), 7, mpq_class(9409, 7)},
      {mpq_class(0), mpq_class(5), 5, mpq_class(5)},
      {mpq_class(12), mpq_class(12), 1, mpq_class(0)},
      {mpq_class(3, 2), mpq_class(1, 2), 4, mpq_class(1, 4)},
      {mpq_class(1000), mpq_class(2), 998, mpq_class(996004, 998)},
      {mpq_class(8), mpq_class(6), 2, mpq_class(2)},
  };
  for (const auto& sc : size_cases) {
    ++checked;
    mpq_class got = implied_size_exponent(sc.big_d, sc.d, sc.n);
    mpq_class want = sc.expect;
    want.canonicalize();
    if (!(got == want)) ++failures;
  }
  // the regular-graph corollary stays symbolic: the constant is unresolved
  if (regular_degree_form(6).find("unresolved") == std::string::npos) ++failures;

  double secs = elapsed(start);
  bool pass = failures == 0 && checked >= 20;
  std::ostringstream detail;
  detail << checked << " parameter tuples compared as exact rationals; failures " << failures;
  report(10, "prediction formula arithmetic", pass, detail.str(), secs);
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();

  int passed = 0;
  for (const auto& r : results) passed += r.pass;
  std::printf("%d/%zu criteria passed\n", passed, results.size());
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
