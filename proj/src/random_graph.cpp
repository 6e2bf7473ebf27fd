#include "pclab/random_graph.hpp"

#include <algorithm>

#include "pclab/errors.hpp"

namespace pclab {

Graph sample_gnp(uint32_t n, double p, uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0,1]");
  Rng rng(seed);
  Graph g(n);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

Graph sample_regular(uint32_t n, uint32_t d, uint64_t seed, uint64_t rejection_budget,
                     uint64_t* attempts_out) {
  require(d < n, "regular sampler needs d < n");
  require((static_cast<uint64_t>(d) * n) % 2 == 0, "regular sampler needs d*n even");
  Rng rng(seed);
  std::vector<uint32_t> stubs(static_cast<size_t>(d) * n);
  for (uint32_t v = 0; v < n; ++v)
    for (uint32_t i = 0; i < d; ++i) stubs[static_cast<size_t>(v) * d + i] = v;

  for (uint64_t attempt = 1; attempt <= rejection_budget; ++attempt) {
    rng.shuffle(stubs);
    Graph g(n);
    bool simple = true;
    for (size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      uint32_t u = stubs[i], v = stubs[i + 1];
      if (u == v || g.has_edge(u, v)) {
        simple = false;
      } else {
        g.add_edge(u, v);
      }
    }
    if (simple) {
      for (uint32_t v = 0; v < n; ++v)
        check_invariant(g.degree(v) == d, "regular sampler produced a wrong degree");
      if (attempts_out) *attempts_out = attempt;
      return g;
    }
  }
  throw ResourceError("regular sampler exceeded rejection budget of " +
                      std::to_string(rejection_budget) + " attempts");
}

}  // namespace pclab
