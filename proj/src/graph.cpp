#include "pclab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pclab/errors.hpp"

namespace pclab {

Graph::Graph(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges)
    : n_(n), adj_(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(uint32_t u, uint32_t v) {
  require(u < n_ && v < n_, "edge endpoint out of range");
  require(u != v, "self-loops are not allowed");
  if (u > v) std::swap(u, v);
  auto e = std::make_pair(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
  if (u >= n_ || v >= n_ || u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

uint32_t Graph::max_degree() const {
  uint32_t d = 0;
  for (uint32_t v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

size_t Graph::edges_within(const std::vector<uint32_t>& vertices) const {
  std::vector<bool> in(n_, false);
  for (uint32_t v : vertices) in[v] = true;
  size_t count = 0;
  for (uint32_t v : vertices)
    for (uint32_t u : adj_[v])
      if (u > v && in[u]) ++count;
  return count;
}

Graph Graph::induced(const std::vector<uint32_t>& vertices,
                     std::vector<uint32_t>* vertex_map) const {
  std::vector<uint32_t> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int64_t> newid(n_, -1);
  for (size_t i = 0; i < sorted.size(); ++i) newid[sorted[i]] = static_cast<int64_t>(i);
  Graph g(static_cast<uint32_t>(sorted.size()));
  for (auto [u, v] : edges_)
    if (newid[u] >= 0 && newid[v] >= 0)
      g.add_edge(static_cast<uint32_t>(newid[u]), static_cast<uint32_t>(newid[v]));
  if (vertex_map) *vertex_map = sorted;
  return g;
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  out << g.n() << " " << g.m() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph graph_from_string(const std::string& text) {
  std::istringstream in(text);
  uint32_t n;
  size_t m;
  if (!(in >> n >> m)) throw DomainError("bad graph header");
  Graph g(n);
  for (size_t i = 0; i < m; ++i) {
    uint32_t u, v;
    if (!(in >> u >> v)) throw DomainError("graph file truncated");
    require(u < v, "graph edges must be written as u < v");
    g.add_edge(u, v);
  }
  require(g.m() == m, "duplicate edges in graph file");
  return g;
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot open " + path + " for writing");
  out << graph_to_string(g);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return graph_from_string(buf.str());
}

VertexOrder::VertexOrder(std::vector<uint32_t> r) : rank(std::move(r)) {
  std::vector<bool> seen(rank.size(), false);
  for (uint32_t x : rank) {
    require(x < rank.size() && !seen[x], "vertex order must be a bijection");
    seen[x] = true;
  }
}

VertexOrder VertexOrder::identity(uint32_t n) {
  std::vector<uint32_t> r(n);
  for (uint32_t i = 0; i < n; ++i) r[i] = i;
  return VertexOrder(std::move(r));
}

std::string vertex_order_to_string(const VertexOrder& ord) {
  std::ostringstream out;
  for (uint32_t r : ord.rank) out << r << "\n";
  return out.str();
}

VertexOrder vertex_order_from_string(const std::string& text) {
  std::istringstream in(text);
  std::vector<uint32_t> ranks;
  uint32_t r;
  while (in >> r) ranks.push_back(r);
  return VertexOrder(std::move(ranks));
}

}  // namespace pclab
