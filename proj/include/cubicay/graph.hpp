#pragma once

#include <cstdint>
#include <vector>

namespace cubicay {

// Plain undirected simple graph on vertices 0..n-1.
struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n(n), adj(static_cast<std::size_t>(n)) {}
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edge_list() const;  // u < v, sorted
  int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
};

// Fixed-size bitset over vertex ids.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), bits_((static_cast<std::size_t>(n) + 63) / 64, 0) {}
  void insert(int v) { bits_[static_cast<std::size_t>(v) >> 6] |= (1ULL << (v & 63)); }
  void erase(int v) { bits_[static_cast<std::size_t>(v) >> 6] &= ~(1ULL << (v & 63)); }
  bool contains(int v) const { return bits_[static_cast<std::size_t>(v) >> 6] >> (v & 63) & 1; }
  bool subset_of(const VertexSet& o) const;
  bool operator==(const VertexSet&) const = default;
  int size_hint() const { return n_; }

private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Connected components after deleting `removed` vertices; comp[v] = component
// id or -1 for removed vertices. Returns the number of components.
int components(const SimpleGraph& g, const std::vector<char>& removed, std::vector<int>& comp);

bool is_connected(const SimpleGraph& g);

// Articulation vertices of g restricted to its live part (removed vertices are
// ignored entirely).
std::vector<char> articulation_points(const SimpleGraph& g, const std::vector<char>& removed);

// Biconnected components as edge sets; isolated vertices ignored.
std::vector<std::vector<std::pair<int, int>>> biconnected_components(const SimpleGraph& g);

// True if deleting any single vertex keeps all `marked` vertices in one
// component (no 1-cut separates two marked vertices).
bool no_cut_vertex_separates(const SimpleGraph& g, const std::vector<char>& marked);

// Exact graph isomorphism by backtracking with degree refinement. Intended for
// graphs of at most ~100 vertices.
bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace cubicay
