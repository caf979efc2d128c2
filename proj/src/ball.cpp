#include "cubicay/ball.hpp"

#include <algorithm>
#include <queue>

#include "cubicay/errors.hpp"

namespace cubicay {
namespace {

int slot_of(char letter) {
  switch (letter) {
    case 'a': return 0;
    case 'A': return 1;
    case 'b': return 2;
    case 'c': return 3;
  }
  throw BadParameter(std::string("bad letter: ") + letter);
}

// word -> BFS distance from the identity, capped at radius
std::unordered_map<Word, int> bfs_distances(const RewriteSystem& rs, int radius,
                                            std::size_t cap) {
  if (radius < 0) throw BadParameter("radius must be >= 0");
  const std::string alphabet = rs.spec().alphabet();
  std::unordered_map<Word, int> dist;
  dist[""] = 0;
  std::vector<Word> frontier = {""};
  for (int d = 1; d <= radius; ++d) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (char letter : alphabet) {
        Word u = rs.normal_form(w + letter);
        if (dist.emplace(u, d).second) {
          if (dist.size() > cap) throw BallCapExceeded(cap);
          next.push_back(std::move(u));
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

int CayleyBall::index_of(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

bool CayleyBall::adjacent(int u, int v) const {
  const auto& nb = adj[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool CayleyBall::operator==(const CayleyBall& other) const {
  return spec.family == other.spec.family && spec.n == other.spec.n && spec.m == other.spec.m &&
         radius == other.radius && verts == other.verts && depth == other.depth &&
         edges == other.edges;
}

void CayleyBall::finalize() {
  index_.clear();
  for (int i = 0; i < size(); ++i) index_.emplace(verts[static_cast<std::size_t>(i)], i);
  adj.assign(verts.size(), {});
  for (const BallEdge& e : edges) {
    if (e.u == e.v) throw BadParameter("self-loop in ball: relator of length <= 2 beyond involution squares");
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

CayleyBall build_ball(const RewriteSystem& rs, int radius, std::size_t cap) {
  if (radius < 1) throw BadParameter("radius must be >= 1");
  auto dist = bfs_distances(rs, radius, cap);

  CayleyBall ball;
  ball.spec = rs.spec();
  ball.radius = radius;
  ball.verts.reserve(dist.size());
  for (const auto& [w, d] : dist) ball.verts.push_back(w);
  std::sort(ball.verts.begin(), ball.verts.end(), ShortlexLess{});

  ball.depth.resize(ball.verts.size());
  ball.index_.reserve(ball.verts.size());
  for (int i = 0; i < ball.size(); ++i) {
    ball.index_.emplace(ball.verts[static_cast<std::size_t>(i)], i);
    ball.depth[static_cast<std::size_t>(i)] = radius - dist[ball.verts[static_cast<std::size_t>(i)]];
  }

  const std::string alphabet = rs.spec().alphabet();
  ball.step.assign(ball.verts.size(), {-1, -1, -1, -1});
  for (int i = 0; i < ball.size(); ++i) {
    for (char letter : alphabet) {
      const Word target = rs.normal_form(ball.verts[static_cast<std::size_t>(i)] + letter);
      ball.step[static_cast<std::size_t>(i)][static_cast<std::size_t>(slot_of(letter))] =
          ball.index_of(target);
    }
  }

  const bool a_directed = !rs.spec().a_is_involution();
  for (int u = 0; u < ball.size(); ++u) {
    for (char letter : alphabet) {
      if (letter == 'A') continue;
      const int v = ball.step[static_cast<std::size_t>(u)][static_cast<std::size_t>(slot_of(letter))];
      if (v < 0) continue;
      const bool directed = (letter == 'a') && a_directed;
      if (!directed && v < u) continue;  // undirected edges once, least endpoint first
      ball.edges.push_back({u, v, letter, directed});
    }
  }
  std::sort(ball.edges.begin(), ball.edges.end(), [](const BallEdge& x, const BallEdge& y) {
    return std::tie(x.u, x.v, x.label) < std::tie(y.u, y.v, y.label);
  });
  ball.finalize();
  return ball;
}

std::vector<std::size_t> growth_sequence(const RewriteSystem& rs, int radius, std::size_t cap) {
  if (radius < 0) throw BadParameter("radius must be >= 0");
  auto dist = bfs_distances(rs, radius, cap);
  std::vector<std::size_t> sizes(static_cast<std::size_t>(radius) + 1, 0);
  for (const auto& [w, d] : dist) ++sizes[static_cast<std::size_t>(d)];
  return sizes;
}

CayleyBall make_synthetic_ball(std::vector<Word> names, std::vector<BallEdge> edges,
                               std::vector<int> depths, int radius) {
  if (names.size() != depths.size()) throw BadParameter("names/depths size mismatch");
  CayleyBall ball;
  ball.synthetic = true;
  ball.spec = FamilySpec{FamilyId::P1, 2, 0};
  ball.radius = radius;
  ball.verts = std::move(names);
  ball.depth = std::move(depths);
  ball.edges = std::move(edges);
  ball.step.assign(ball.verts.size(), {-1, -1, -1, -1});
  ball.finalize();
  return ball;
}

int ball_translate(const CayleyBall& ball, const RewriteSystem& rs, int g, int v) {
  const Word& path = ball.verts[static_cast<std::size_t>(v)];
  int cur = g;
  for (char letter : path) {
    cur = ball.step[static_cast<std::size_t>(cur)][static_cast<std::size_t>(slot_of(letter))];
    if (cur < 0) break;
  }
  if (cur >= 0) return cur;
  return ball.index_of(rs.multiply(ball.verts[static_cast<std::size_t>(g)], path));
}

}  // namespace cubicay
