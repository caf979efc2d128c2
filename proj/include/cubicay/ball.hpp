#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubicay/rewrite.hpp"

namespace cubicay {

inline constexpr std::size_t kBallVertexCap = 200000;

struct BallEdge {
  int u = -1;
  int v = -1;
  char label = '?';     // 'a', 'b' or 'c'
  bool directed = false;  // true only for a-edges when a is not an involution

  bool operator==(const BallEdge&) const = default;
};

// Finite radius-r ball of Cay(G,S). Vertices are normal forms in shortlex
// order (ids are positions), depth[v] = radius - BFS distance from the
// identity. Immutable once built.
struct CayleyBall {
  FamilySpec spec;
  int radius = 0;
  bool synthetic = false;  // fixture graphs that carry no group structure

  std::vector<Word> verts;
  std::vector<int> depth;
  std::vector<std::array<int, 4>> step;  // per vertex: slots a, A, b, c
  std::vector<BallEdge> edges;
  std::vector<std::vector<int>> adj;  // undirected, sorted, no duplicates

  int size() const { return static_cast<int>(verts.size()); }
  int index_of(const Word& w) const;
  int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
  bool adjacent(int u, int v) const;

  bool operator==(const CayleyBall& other) const;

private:
  friend CayleyBall build_ball(const RewriteSystem&, int, std::size_t);
  friend CayleyBall make_synthetic_ball(std::vector<Word>, std::vector<BallEdge>,
                                        std::vector<int>, int);
  friend CayleyBall ball_from_json_impl(CayleyBall);
  void finalize();

  std::unordered_map<Word, int> index_;
};

CayleyBall build_ball(const RewriteSystem& rs, int radius, std::size_t cap = kBallVertexCap);

// BFS sphere sizes 0..radius.
std::vector<std::size_t> growth_sequence(const RewriteSystem& rs, int radius,
                                         std::size_t cap = kBallVertexCap);

// Fixture constructor for tests: arbitrary labeled graph posing as a ball.
CayleyBall make_synthetic_ball(std::vector<Word> names, std::vector<BallEdge> edges,
                               std::vector<int> depths, int radius);

// id of nf(g * v), walking the ball where possible; -1 when outside the ball.
int ball_translate(const CayleyBall& ball, const RewriteSystem& rs, int g, int v);

}  // namespace cubicay
