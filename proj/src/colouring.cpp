#include "pclab/colouring.hpp"

#include <algorithm>

#include "pclab/errors.hpp"

namespace pclab {

bool colouring_is_proper(const Graph& g, const Colouring& c) {
  if (c.size() != g.n()) return false;
  for (auto [u, v] : g.edges())
    if (c[u] != 0 && c[u] == c[v]) return false;
  return true;
}

namespace {

struct ExactColourer {
  const Graph& g;
  uint32_t k;  // <= 62 so colour sets fit in a word
  uint64_t node_budget;
  uint64_t nodes = 0;
  Colouring colour;

  bool solve() {
    colour.assign(g.n(), 0);
    return assign(0, 0);
  }

  bool assign(uint32_t coloured, uint32_t max_used) {
    if (++nodes > node_budget)
      throw ResourceError("colouring search budget of " + std::to_string(node_budget) +
                          " nodes exceeded");
    if (coloured == g.n()) return true;

    // most-saturated vertex next, ties by degree then id
    uint32_t best = g.n();
    int best_sat = -1, best_deg = -1;
    for (uint32_t v = 0; v < g.n(); ++v) {
      if (colour[v] != 0) continue;
      uint64_t mask = 0;
      for (uint32_t u : g.neighbours(v))
        if (colour[u] != 0) mask |= 1ULL << colour[u];
      int sat = __builtin_popcountll(mask);
      int deg = static_cast<int>(g.degree(v));
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best_sat = sat;
        best_deg = deg;
        best = v;
      }
    }

    uint64_t forbidden = 0;
    for (uint32_t u : g.neighbours(best))
      if (colour[u] != 0) forbidden |= 1ULL << colour[u];
    uint32_t limit = std::min(k, max_used + 1);  // colour classes are symmetric
    for (uint32_t c = 1; c <= limit; ++c) {
      if (forbidden & (1ULL << c)) continue;
      colour[best] = c;
      if (assign(coloured + 1, std::max(max_used, c))) return true;
      colour[best] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Colouring> is_k_colourable(const Graph& g, uint32_t k,
                                         const ColouringBudget& budget) {
  require(k >= 1, "colour count must be >= 1");
  if (g.n() > budget.max_vertices)
    throw ResourceError("exact colouring guarded to " + std::to_string(budget.max_vertices) +
                        " vertices, graph has " + std::to_string(g.n()));
  if (g.n() == 0) return Colouring{};
  if (k >= g.max_degree() + 1) {
    // first-fit always succeeds with max_degree+1 colours
    Colouring c = greedy_colouring(g);
    check_invariant(colouring_is_proper(g, c), "greedy colouring not proper");
    check_invariant(*std::max_element(c.begin(), c.end()) <= k, "greedy exceeded k");
    return c;
  }
  ExactColourer solver{g, std::min(k, 62u), budget.max_nodes};
  if (!solver.solve()) return std::nullopt;
  check_invariant(colouring_is_proper(g, solver.colour), "exact colouring not proper");
  return solver.colour;
}

uint32_t chromatic_number(const Graph& g, const ColouringBudget& budget) {
  if (g.n() == 0) return 0;
  for (uint32_t k = 1; k <= g.n(); ++k) {
    if (is_k_colourable(g, k, budget)) return k;
  }
  throw InvariantError("graph not n-colourable");
}

Colouring greedy_colouring(const Graph& g) {
  Colouring c(g.n(), 0);
  for (uint32_t v = 0; v < g.n(); ++v) {
    std::vector<bool> used(g.n() + 2, false);
    for (uint32_t u : g.neighbours(v))
      if (u < v) used[c[u]] = true;
    uint32_t col = 1;
    while (used[col]) ++col;
    c[v] = col;
  }
  return c;
}

}  // namespace pclab
