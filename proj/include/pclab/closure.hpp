#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pclab/graph.hpp"

namespace pclab {

// All v reachable from U along strictly rank-decreasing paths; U included.
std::vector<uint32_t> descendants(const Graph& g, const VertexOrder& ord,
                                  const std::vector<uint32_t>& u);

struct HopOrLasso {
  enum class Kind { hop2, hop3, hop4, lasso };
  Kind kind;
  // Walk vertex list. Hops: simple path (endpoints in the reference set) or
  // simple cycle written with the repeated endpoint first and last. Lassos:
  // (v1,v2,v3,v4,v2) with only v1 in the reference set.
  std::vector<uint32_t> walk;

  std::vector<uint32_t> vertex_set() const;
  uint32_t length() const { return static_cast<uint32_t>(walk.size()) - 1; }
};

// Some 2-, 3- or 4-hop or lasso with respect to w, searched by increasing
// length with lexicographic tie-breaks, or nullopt if none exists.
std::optional<HopOrLasso> find_hop_or_lasso(const Graph& g, const std::vector<uint32_t>& w);

bool is_closed(const Graph& g, const VertexOrder& ord, const std::vector<uint32_t>& w);

struct ClosureResult {
  std::vector<uint32_t> closure;        // sorted
  std::vector<HopOrLasso> hops;         // Q_1..Q_t in the order they were added
  std::vector<uint32_t> witness;        // Z = U union all V(Q_i), sorted
};

// Saturation: start from the descendants of U, repeatedly absorb a hop or
// lasso and re-close under descendants. The result is the unique minimal
// closed superset; the witness Z satisfies descendants(Z) == closure.
ClosureResult closure_with_witness(const Graph& g, const VertexOrder& ord,
                                   const std::vector<uint32_t>& u);
std::vector<uint32_t> closure(const Graph& g, const VertexOrder& ord,
                              const std::vector<uint32_t>& u);

// Minimal superset of U in which every outside vertex has at most one
// neighbour inside.
std::vector<uint32_t> resolution_closure(const Graph& g, const std::vector<uint32_t>& u);

// Contract the edges in S (subset of E); parallel edges merge, components
// relabel to 0..n'-1 by smallest original member.
Graph contract(const Graph& g, const std::vector<std::pair<uint32_t, uint32_t>>& s);

// Generic quotient: merge vertices with equal labels; label order decides ids.
Graph quotient_by_labels(const Graph& g, const std::vector<uint32_t>& label,
                         uint32_t n_classes, bool allow_internal_edges = false);

// Scan vertices in ascending id, removing any whose current degree is >= delta.
// The residual graph has maximum degree <= delta-1 (verified).
std::vector<uint32_t> high_degree_cover(const Graph& g, uint32_t delta);

}  // namespace pclab
