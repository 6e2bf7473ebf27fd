#include "pclab/closure.hpp"

#include <algorithm>
#include <numeric>

#include "pclab/errors.hpp"

namespace pclab {

std::vector<uint32_t> descendants(const Graph& g, const VertexOrder& ord,
                                  const std::vector<uint32_t>& u) {
  require(ord.n() == g.n(), "vertex order size mismatch");
  std::vector<char> in(g.n(), 0);
  std::vector<uint32_t> stack;
  for (uint32_t v : u) {
    require(v < g.n(), "vertex out of range");
    if (!in[v]) {
      in[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    uint32_t v = stack.back();
    stack.pop_back();
    for (uint32_t w : g.neighbours(v)) {
      if (!in[w] && ord.before(w, v)) {
        in[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<uint32_t> out;
  for (uint32_t v = 0; v < g.n(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

std::vector<uint32_t> HopOrLasso::vertex_set() const {
  std::vector<uint32_t> vs = walk;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

namespace {

// Paths (w0, a, .., w1) of the given length with endpoints in W and interior
// outside; explored in ascending vertex id at every level.
bool find_path_hop(const Graph& g, const std::vector<char>& in_w, uint32_t len,
                   std::vector<uint32_t>& out) {
  std::vector<uint32_t> walk;
  std::vector<char> used(g.n(), 0);
  std::function<bool(uint32_t, uint32_t)> dfs = [&](uint32_t v, uint32_t remaining) -> bool {
    if (remaining == 0) return false;
    for (uint32_t w : g.neighbours(v)) {
      if (used[w]) continue;
      if (remaining == 1) {
        if (in_w[w] && w != walk.front()) {
          walk.push_back(w);
          out = walk;
          return true;
        }
        continue;
      }
      if (in_w[w]) continue;
      used[w] = 1;
      walk.push_back(w);
      if (dfs(w, remaining - 1)) return true;
      walk.pop_back();
      used[w] = 0;
    }
    return false;
  };
  for (uint32_t v0 = 0; v0 < g.n(); ++v0) {
    if (!in_w[v0]) continue;
    walk.assign(1, v0);
    used.assign(g.n(), 0);
    used[v0] = 1;
    if (dfs(v0, len)) return true;
  }
  return false;
}

// Cycles (w0, a, .., w0) of the given length through a single W vertex with
// all interior vertices outside W.
bool find_cycle_hop(const Graph& g, const std::vector<char>& in_w, uint32_t len,
                    std::vector<uint32_t>& out) {
  std::vector<uint32_t> walk;
  std::vector<char> used(g.n(), 0);
  std::function<bool(uint32_t, uint32_t)> dfs = [&](uint32_t v, uint32_t remaining) -> bool {
    for (uint32_t w : g.neighbours(v)) {
      if (remaining == 1) {
        if (w == walk.front()) {
          walk.push_back(w);
          out = walk;
          return true;
        }
        continue;
      }
      if (used[w] || in_w[w]) continue;
      used[w] = 1;
      walk.push_back(w);
      if (dfs(w, remaining - 1)) return true;
      walk.pop_back();
      used[w] = 0;
    }
    return false;
  };
  for (uint32_t v0 = 0; v0 < g.n(); ++v0) {
    if (!in_w[v0]) continue;
    walk.assign(1, v0);
    used.assign(g.n(), 0);
    used[v0] = 1;
    if (dfs(v0, len)) return true;
  }
  return false;
}

// Walks (v1, v2, v3, v4, v2) with only v1 in W: an edge into a triangle.
bool find_lasso(const Graph& g, const std::vector<char>& in_w, std::vector<uint32_t>& out) {
  for (uint32_t v1 = 0; v1 < g.n(); ++v1) {
    if (!in_w[v1]) continue;
    for (uint32_t v2 : g.neighbours(v1)) {
      if (in_w[v2]) continue;
      for (uint32_t v3 : g.neighbours(v2)) {
        if (in_w[v3] || v3 == v1) continue;
        for (uint32_t v4 : g.neighbours(v3)) {
          if (in_w[v4] || v4 == v1 || v4 == v2) continue;
          if (g.has_edge(v4, v2)) {
            out = {v1, v2, v3, v4, v2};
            return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

std::optional<HopOrLasso> find_hop_or_lasso(const Graph& g, const std::vector<uint32_t>& w) {
  std::vector<char> in_w(g.n(), 0);
  for (uint32_t v : w) {
    require(v < g.n(), "vertex out of range");
    in_w[v] = 1;
  }
  std::vector<uint32_t> walk;
  if (find_path_hop(g, in_w, 2, walk)) return HopOrLasso{HopOrLasso::Kind::hop2, walk};
  if (find_path_hop(g, in_w, 3, walk)) return HopOrLasso{HopOrLasso::Kind::hop3, walk};
  if (find_cycle_hop(g, in_w, 3, walk)) return HopOrLasso{HopOrLasso::Kind::hop3, walk};
  if (find_path_hop(g, in_w, 4, walk)) return HopOrLasso{HopOrLasso::Kind::hop4, walk};
  if (find_cycle_hop(g, in_w, 4, walk)) return HopOrLasso{HopOrLasso::Kind::hop4, walk};
  if (find_lasso(g, in_w, walk)) return HopOrLasso{HopOrLasso::Kind::lasso, walk};
  return std::nullopt;
}

bool is_closed(const Graph& g, const VertexOrder& ord, const std::vector<uint32_t>& w) {
  auto desc = descendants(g, ord, w);
  if (desc.size() != w.size()) return false;
  return !find_hop_or_lasso(g, w).has_value();
}

ClosureResult closure_with_witness(const Graph& g, const VertexOrder& ord,
                                   const std::vector<uint32_t>& u) {
  ClosureResult res;
  res.witness = u;
  std::sort(res.witness.begin(), res.witness.end());
  res.witness.erase(std::unique(res.witness.begin(), res.witness.end()), res.witness.end());

  std::vector<uint32_t> w = descendants(g, ord, u);
  for (;;) {
    auto q = find_hop_or_lasso(g, w);
    if (!q) break;
    res.hops.push_back(*q);
    std::vector<uint32_t> seed = w;
    auto qs = q->vertex_set();
    seed.insert(seed.end(), qs.begin(), qs.end());
    w = descendants(g, ord, seed);
    for (uint32_t v : qs)
      res.witness.insert(std::lower_bound(res.witness.begin(), res.witness.end(), v), v);
    res.witness.erase(std::unique(res.witness.begin(), res.witness.end()), res.witness.end());
  }
  res.closure = std::move(w);

  auto dz = descendants(g, ord, res.witness);
  check_invariant(dz == res.closure, "closure witness fails Desc(Z) == closure");
  return res;
}

std::vector<uint32_t> closure(const Graph& g, const VertexOrder& ord,
                              const std::vector<uint32_t>& u) {
  return closure_with_witness(g, ord, u).closure;
}

std::vector<uint32_t> resolution_closure(const Graph& g, const std::vector<uint32_t>& u) {
  std::vector<char> in(g.n(), 0);
  for (uint32_t v : u) {
    require(v < g.n(), "vertex out of range");
    in[v] = 1;
  }
  for (;;) {
    bool grew = false;
    for (uint32_t v = 0; v < g.n() && !grew; ++v) {
      if (in[v]) continue;
      uint32_t inside = 0;
      for (uint32_t w : g.neighbours(v))
        if (in[w]) ++inside;
      if (inside >= 2) {
        in[v] = 1;
        grew = true;
      }
    }
    if (!grew) break;
  }
  std::vector<uint32_t> out;
  for (uint32_t v = 0; v < g.n(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

Graph quotient_by_labels(const Graph& g, const std::vector<uint32_t>& label,
                         uint32_t n_classes, bool allow_internal_edges) {
  Graph q(n_classes);
  for (auto [u, v] : g.edges()) {
    if (label[u] == label[v]) {
      require(allow_internal_edges, "contraction would create a self-loop");
      continue;
    }
    q.add_edge(label[u], label[v]);
  }
  return q;
}

Graph contract(const Graph& g, const std::vector<std::pair<uint32_t, uint32_t>>& s) {
  std::vector<uint32_t> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : s) {
    require(g.has_edge(u, v), "contraction set contains a non-edge");
    uint32_t a = find(u), b = find(v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);  // min id represents
  }
  // relabel components to 0..n'-1 in order of their smallest member
  std::vector<int64_t> newid(g.n(), -1);
  uint32_t next = 0;
  std::vector<uint32_t> label(g.n());
  for (uint32_t v = 0; v < g.n(); ++v) {
    uint32_t root = find(v);
    if (newid[root] < 0) newid[root] = next++;
    label[v] = static_cast<uint32_t>(newid[root]);
  }
  return quotient_by_labels(g, label, next, /*allow_internal_edges=*/true);
}

std::vector<uint32_t> high_degree_cover(const Graph& g, uint32_t delta) {
  require(delta >= 1, "delta must be >= 1");
  std::vector<uint32_t> deg(g.n());
  std::vector<char> removed(g.n(), 0);
  for (uint32_t v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
  std::vector<uint32_t> cover;
  for (uint32_t v = 0; v < g.n(); ++v) {
    if (deg[v] >= delta) {
      removed[v] = 1;
      cover.push_back(v);
      for (uint32_t w : g.neighbours(v))
        if (!removed[w]) --deg[w];
    }
  }
  for (uint32_t v = 0; v < g.n(); ++v)
    check_invariant(removed[v] || deg[v] <= delta - 1, "residual degree above delta-1");
  return cover;
}

}  // namespace pclab
