#include "cubicay/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cubicay/errors.hpp"

namespace cubicay {

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw BadParameter("self-loop");
  if (has_edge(u, v)) return;
  adj[static_cast<std::size_t>(u)].push_back(v);
  adj[static_cast<std::size_t>(v)].push_back(u);
}

bool SimpleGraph::has_edge(int u, int v) const {
  const auto& nb = adj[static_cast<std::size_t>(u)];
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adj) twice += nb.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v : adj[static_cast<std::size_t>(u)])
      if (u < v) edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~o.bits_[i]) return false;
  return true;
}

int components(const SimpleGraph& g, const std::vector<char>& removed, std::vector<int>& comp) {
  comp.assign(static_cast<std::size_t>(g.n), -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (removed[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] != -1) continue;
    comp[static_cast<std::size_t>(s)] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : g.adj[static_cast<std::size_t>(u)]) {
        if (removed[static_cast<std::size_t>(v)] || comp[static_cast<std::size_t>(v)] != -1) continue;
        comp[static_cast<std::size_t>(v)] = count;
        stack.push_back(v);
      }
    }
    ++count;
  }
  return count;
}

bool is_connected(const SimpleGraph& g) {
  if (g.n == 0) return true;
  std::vector<int> comp;
  return components(g, std::vector<char>(static_cast<std::size_t>(g.n), 0), comp) <= 1;
}

namespace {

// Iterative Tarjan lowlink pass; visits only live vertices.
struct ArticulationScan {
  const SimpleGraph& g;
  const std::vector<char>& removed;
  std::vector<int> disc, low, parent, child_count;
  std::vector<char> artic;
  int timer = 0;

  ArticulationScan(const SimpleGraph& g, const std::vector<char>& removed)
      : g(g),
        removed(removed),
        disc(static_cast<std::size_t>(g.n), -1),
        low(static_cast<std::size_t>(g.n), 0),
        parent(static_cast<std::size_t>(g.n), -1),
        child_count(static_cast<std::size_t>(g.n), 0),
        artic(static_cast<std::size_t>(g.n), 0) {}

  void run(int root) {
    std::vector<std::pair<int, std::size_t>> stack = {{root, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      const auto& nb = g.adj[static_cast<std::size_t>(u)];
      if (i < nb.size()) {
        const int v = nb[i++];
        if (removed[static_cast<std::size_t>(v)]) continue;
        if (disc[static_cast<std::size_t>(v)] == -1) {
          parent[static_cast<std::size_t>(v)] = u;
          ++child_count[static_cast<std::size_t>(u)];
          disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
          stack.emplace_back(v, 0);
        } else if (v != parent[static_cast<std::size_t>(u)]) {
          low[static_cast<std::size_t>(u)] =
              std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
        }
      } else {
        stack.pop_back();
        const int p = parent[static_cast<std::size_t>(u)];
        if (p != -1) {
          low[static_cast<std::size_t>(p)] =
              std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
          if (p != root && low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(p)])
            artic[static_cast<std::size_t>(p)] = 1;
        }
      }
    }
    if (child_count[static_cast<std::size_t>(root)] >= 2) artic[static_cast<std::size_t>(root)] = 1;
  }
};

}  // namespace

std::vector<char> articulation_points(const SimpleGraph& g, const std::vector<char>& removed) {
  ArticulationScan scan(g, removed);
  for (int s = 0; s < g.n; ++s)
    if (!removed[static_cast<std::size_t>(s)] && scan.disc[static_cast<std::size_t>(s)] == -1)
      scan.run(s);
  return scan.artic;
}

std::vector<std::vector<std::pair<int, int>>> biconnected_components(const SimpleGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> blocks;
  std::vector<int> disc(static_cast<std::size_t>(g.n), -1), low(static_cast<std::size_t>(g.n), 0),
      parent(static_cast<std::size_t>(g.n), -1);
  std::vector<std::pair<int, int>> edge_stack;
  int timer = 0;

  for (int root = 0; root < g.n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<std::pair<int, std::size_t>> stack = {{root, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      const auto& nb = g.adj[static_cast<std::size_t>(u)];
      if (i < nb.size()) {
        const int v = nb[i++];
        if (disc[static_cast<std::size_t>(v)] == -1) {
          parent[static_cast<std::size_t>(v)] = u;
          edge_stack.emplace_back(u, v);
          disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
          stack.emplace_back(v, 0);
        } else if (v != parent[static_cast<std::size_t>(u)] &&
                   disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
          edge_stack.emplace_back(u, v);
          low[static_cast<std::size_t>(u)] =
              std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
        }
      } else {
        stack.pop_back();
        const int p = parent[static_cast<std::size_t>(u)];
        if (p == -1) continue;
        low[static_cast<std::size_t>(p)] =
            std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
        if (low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(p)]) {
          std::vector<std::pair<int, int>> block;
          while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == std::make_pair(p, u)) break;
          }
          if (!block.empty()) blocks.push_back(std::move(block));
        }
      }
    }
  }
  return blocks;
}

bool no_cut_vertex_separates(const SimpleGraph& g, const std::vector<char>& marked) {
  std::vector<char> removed(static_cast<std::size_t>(g.n), 0);
  auto artic = articulation_points(g, removed);
  std::vector<int> comp;
  for (int w = 0; w < g.n; ++w) {
    if (!artic[static_cast<std::size_t>(w)]) continue;
    removed[static_cast<std::size_t>(w)] = 1;
    components(g, removed, comp);
    removed[static_cast<std::size_t>(w)] = 0;
    int seen = -1;
    for (int v = 0; v < g.n; ++v) {
      if (v == w || !marked[static_cast<std::size_t>(v)]) continue;
      if (seen == -1)
        seen = comp[static_cast<std::size_t>(v)];
      else if (comp[static_cast<std::size_t>(v)] != seen)
        return false;
    }
  }
  return true;
}

namespace {

// Backtracking isomorphism with neighbor-degree signatures as the invariant.
struct IsoSearch {
  const SimpleGraph& a;
  const SimpleGraph& b;
  std::vector<int> map_ab, map_ba;
  std::vector<std::vector<int>> sig_a, sig_b;

  IsoSearch(const SimpleGraph& a, const SimpleGraph& b)
      : a(a),
        b(b),
        map_ab(static_cast<std::size_t>(a.n), -1),
        map_ba(static_cast<std::size_t>(b.n), -1) {
    sig_a = signatures(a);
    sig_b = signatures(b);
  }

  static std::vector<std::vector<int>> signatures(const SimpleGraph& g) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
      for (int w : g.adj[static_cast<std::size_t>(v)])
        sig[static_cast<std::size_t>(v)].push_back(g.degree(w));
      std::sort(sig[static_cast<std::size_t>(v)].begin(), sig[static_cast<std::size_t>(v)].end());
      sig[static_cast<std::size_t>(v)].push_back(g.degree(v));
    }
    return sig;
  }

  bool compatible(int va, int vb) const {
    if (sig_a[static_cast<std::size_t>(va)] != sig_b[static_cast<std::size_t>(vb)]) return false;
    for (int w : a.adj[static_cast<std::size_t>(va)]) {
      const int m = map_ab[static_cast<std::size_t>(w)];
      if (m != -1 && !b.has_edge(vb, m)) return false;
    }
    for (int w : b.adj[static_cast<std::size_t>(vb)]) {
      const int m = map_ba[static_cast<std::size_t>(w)];
      if (m != -1 && !a.has_edge(va, m)) return false;
    }
    return true;
  }

  bool extend(const std::vector<int>& order, std::size_t k) {
    if (k == order.size()) return true;
    const int va = order[k];
    for (int vb = 0; vb < b.n; ++vb) {
      if (map_ba[static_cast<std::size_t>(vb)] != -1) continue;
      if (!compatible(va, vb)) continue;
      map_ab[static_cast<std::size_t>(va)] = vb;
      map_ba[static_cast<std::size_t>(vb)] = va;
      if (extend(order, k + 1)) return true;
      map_ab[static_cast<std::size_t>(va)] = -1;
      map_ba[static_cast<std::size_t>(vb)] = -1;
    }
    return false;
  }
};

}  // namespace

bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  if (a.n == 0) return true;

  // BFS order keeps the partial map connected so pruning bites early.
  std::vector<int> order;
  std::vector<char> placed(static_cast<std::size_t>(a.n), 0);
  for (int s = 0; s < a.n; ++s) {
    if (placed[static_cast<std::size_t>(s)]) continue;
    std::vector<int> queue = {s};
    placed[static_cast<std::size_t>(s)] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      order.push_back(u);
      for (int v : a.adj[static_cast<std::size_t>(u)]) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        placed[static_cast<std::size_t>(v)] = 1;
        queue.push_back(v);
      }
    }
  }
  IsoSearch search(a, b);
  return search.extend(order, 0);
}

}  // namespace cubicay
