#include "pclab/sparsity.hpp"

#include <algorithm>

#include "pclab/errors.hpp"

namespace pclab {

mpq_class parse_eps(const std::string& s) {
  require(!s.empty(), "empty sparsity epsilon");
  mpq_class v;
  auto dot = s.find('.');
  if (dot != std::string::npos && s.find('/') == std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw DomainError("bad epsilon: " + s);
    mpz_class den = 1;
    for (size_t i = 0; i < s.size() - dot - 1; ++i) den *= 10;
    v = mpq_class(num, den);
  } else {
    if (v.set_str(s, 10) != 0) throw DomainError("bad epsilon: " + s);
  }
  v.canonicalize();
  require(v >= 0, "epsilon must be nonnegative");
  return v;
}

namespace {

struct SparsitySearch {
  const Graph& g;
  uint32_t l;
  uint64_t num, den;  // eps = num/den
  uint64_t budget;
  uint64_t checked = 0;
  std::vector<uint32_t> witness;

  // violation: |E(U)| * den > (den + num) * |U|
  bool violates(uint64_t edges, uint64_t size) const {
    return edges * den > (den + num) * size;
  }

  bool connected_search() {
    const uint32_t n = g.n();
    std::vector<char> in_set(n, 0), seen(n, 0);
    std::vector<uint32_t> set;
    uint64_t set_edges = 0;

    // Wernicke-style enumeration: every connected set whose minimum vertex is
    // the root is visited exactly once.
    std::function<bool(std::vector<uint32_t>&, uint32_t)> extend =
        [&](std::vector<uint32_t>& ext, uint32_t root) -> bool {
      if (++checked > budget)
        throw ResourceError("sparsity search budget of " + std::to_string(budget) +
                            " sets exceeded");
      if (violates(set_edges, set.size())) {
        witness = set;
        return true;
      }
      if (set.size() == l) return false;
      while (!ext.empty()) {
        uint32_t w = ext.back();
        ext.pop_back();
        std::vector<uint32_t> next_ext = ext;
        std::vector<uint32_t> newly_seen;
        for (uint32_t u : g.neighbours(w)) {
          if (u > root && !seen[u]) {
            seen[u] = 1;
            newly_seen.push_back(u);
            next_ext.push_back(u);
          }
        }
        uint64_t added_edges = 0;
        for (uint32_t u : g.neighbours(w))
          if (in_set[u]) ++added_edges;
        in_set[w] = 1;
        set.push_back(w);
        set_edges += added_edges;
        bool found = extend(next_ext, root);
        set_edges -= added_edges;
        set.pop_back();
        in_set[w] = 0;
        for (uint32_t u : newly_seen) seen[u] = 0;
        if (found) return true;
      }
      return false;
    };

    for (uint32_t root = 0; root < n; ++root) {
      std::fill(seen.begin(), seen.end(), 0);
      seen[root] = 1;
      std::vector<uint32_t> ext;
      for (uint32_t u : g.neighbours(root)) {
        if (u > root) {
          ext.push_back(u);
          seen[u] = 1;
        }
      }
      std::sort(ext.rbegin(), ext.rend());
      in_set[root] = 1;
      set.assign(1, root);
      set_edges = 0;
      bool found = extend(ext, root);
      in_set[root] = 0;
      if (found) return true;
    }
    return false;
  }

  bool exhaustive_search() {
    const uint32_t n = g.n();
    std::vector<uint32_t> adj_mask(n, 0);
    for (auto [u, v] : g.edges()) {
      adj_mask[u] |= 1u << v;
      adj_mask[v] |= 1u << u;
    }
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
      uint32_t size = static_cast<uint32_t>(__builtin_popcount(mask));
      if (size > l) continue;
      if (++checked > budget)
        throw ResourceError("sparsity search budget of " + std::to_string(budget) +
                            " sets exceeded");
      uint64_t edges = 0;
      for (uint32_t v = 0; v < n; ++v)
        if (mask & (1u << v)) edges += __builtin_popcount(adj_mask[v] & mask);
      edges /= 2;
      if (violates(edges, size)) {
        for (uint32_t v = 0; v < n; ++v)
          if (mask & (1u << v)) witness.push_back(v);
        return true;
      }
    }
    return false;
  }
};

}  // namespace

SparsityReport check_sparsity(const Graph& g, uint32_t l, const mpq_class& eps,
                              uint64_t set_budget) {
  require(l >= 1, "sparsity parameter l must be >= 1");
  mpq_class e = eps;
  e.canonicalize();
  require(e.get_num().fits_ulong_p() && e.get_den().fits_ulong_p(),
          "epsilon numerator/denominator too large");

  SparsityReport report;
  report.l = l;
  report.eps = e;
  report.mode =
      g.n() <= 20 ? SparsitySearchMode::exhaustive : SparsitySearchMode::connected_exhaustive;

  SparsitySearch search{g, l, e.get_num().get_ui(), e.get_den().get_ui(), set_budget};
  bool found = report.mode == SparsitySearchMode::exhaustive ? search.exhaustive_search()
                                                             : search.connected_search();
  report.sets_checked = search.checked;
  if (found) {
    report.sparse = false;
    std::sort(search.witness.begin(), search.witness.end());
    // re-verify before emitting
    uint64_t ew = g.edges_within(search.witness);
    check_invariant(search.witness.size() <= l, "sparsity witness too large");
    check_invariant(search.violates(ew, search.witness.size()),
                    "sparsity witness fails re-verification");
    report.witness = std::move(search.witness);
  }
  return report;
}

}  // namespace pclab
