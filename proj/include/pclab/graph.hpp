#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pclab {

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(uint32_t n = 0) : n_(n), adj_(n) {}
  Graph(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges);

  uint32_t n() const { return n_; }
  size_t m() const { return edges_.size(); }
  bool has_edge(uint32_t u, uint32_t v) const;
  void add_edge(uint32_t u, uint32_t v);  // ignores duplicates, rejects loops
  const std::vector<uint32_t>& neighbours(uint32_t v) const { return adj_[v]; }
  uint32_t degree(uint32_t v) const { return static_cast<uint32_t>(adj_[v].size()); }
  uint32_t max_degree() const;

  // Edges as sorted pairs (u < v), lexicographically ordered.
  const std::vector<std::pair<uint32_t, uint32_t>>& edges() const { return edges_; }

  // Number of edges inside a vertex set.
  size_t edges_within(const std::vector<uint32_t>& vertices) const;
  Graph induced(const std::vector<uint32_t>& vertices,
                std::vector<uint32_t>* vertex_map = nullptr) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  void finalize();

  uint32_t n_;
  std::vector<std::pair<uint32_t, uint32_t>> edges_;  // sorted, u < v
  std::vector<std::vector<uint32_t>> adj_;            // sorted neighbour lists
};

// ASCII format: line 1 "n m", then m lines "u v" with 0-indexed u < v,
// sorted lexicographically.
std::string graph_to_string(const Graph& g);
Graph graph_from_string(const std::string& text);
void write_graph_file(const Graph& g, const std::string& path);
Graph read_graph_file(const std::string& path);

// Linear order on vertices: rank[v] = position of v (bijection onto 0..n-1).
struct VertexOrder {
  std::vector<uint32_t> rank;

  explicit VertexOrder(std::vector<uint32_t> r);
  static VertexOrder identity(uint32_t n);

  uint32_t n() const { return static_cast<uint32_t>(rank.size()); }
  bool before(uint32_t u, uint32_t v) const { return rank[u] < rank[v]; }
};

// File format: n lines, line i holds the rank of vertex i.
std::string vertex_order_to_string(const VertexOrder& ord);
VertexOrder vertex_order_from_string(const std::string& text);

}  // namespace pclab
