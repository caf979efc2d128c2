#include "identify_oracle.hpp"

#include <numeric>
#include <stdexcept>

#include "cubicay/errors.hpp"

namespace cubicay::testsupport {
namespace {

int slot_of(char letter) {
  switch (letter) {
    case 'a': return 0;
    case 'A': return 1;
    case 'b': return 2;
    case 'c': return 3;
  }
  throw std::invalid_argument("bad letter");
}

// Heap-style indexing of the complete k-ary prefix tree: root 0, children of
// node v are k*v+1 .. k*v+k.
std::size_t tree_size(int k, int depth) {
  std::size_t total = 0, layer = 1;
  for (int d = 0; d <= depth; ++d) {
    total += layer;
    layer *= static_cast<std::size_t>(k);
  }
  return total;
}

}  // namespace

IdentifyOracle::IdentifyOracle(const FamilySpec& spec, int ball_len)
    : spec_(spec), alphabet_(spec.alphabet()), ball_len_(ball_len) {
  const int k = static_cast<int>(alphabet_.size());
  const std::size_t n = tree_size(k, ball_len);
  parent_.resize(n);
  std::iota(parent_.begin(), parent_.end(), 0);
  edge_.assign(n, {-1, -1, -1, -1});

  // Glue generator edges with their inverses; conflicts perform free reduction
  // (and involution squares) as coincidences.
  std::size_t layer_start = 0, layer_size = 1;
  auto set_edge = [this](int from, int slot, int to) {
    from = find(from);
    int& e = edge_[static_cast<std::size_t>(from)][static_cast<std::size_t>(slot)];
    if (e == -1)
      e = to;
    else if (find(e) != find(to))
      pending_.emplace_back(e, to);
  };
  for (int depth = 0; depth < ball_len; ++depth) {
    for (std::size_t v = layer_start; v < layer_start + layer_size; ++v) {
      for (int i = 0; i < k; ++i) {
        const int child = static_cast<int>(v) * k + 1 + i;
        const char letter = alphabet_[static_cast<std::size_t>(i)];
        set_edge(static_cast<int>(v), slot_of(letter), child);
        set_edge(child, slot_of(spec_.inverse_of(letter)), static_cast<int>(v));
        process_pending();
      }
    }
    layer_start += layer_size;
    layer_size *= static_cast<std::size_t>(k);
  }

  // Trace every relator from every live class until nothing identifies.
  const auto relators = spec_.relators();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (find(static_cast<int>(v)) != static_cast<int>(v)) continue;
      for (const Word& r : relators) {
        int cur = static_cast<int>(v);
        bool ok = true;
        for (char letter : r) {
          cur = edge_[static_cast<std::size_t>(find(cur))][static_cast<std::size_t>(slot_of(letter))];
          if (cur == -1) {
            ok = false;
            break;
          }
        }
        if (ok && find(cur) != static_cast<int>(v)) {
          pending_.emplace_back(cur, static_cast<int>(v));
          process_pending();
          changed = true;
        }
      }
    }
  }
}

int IdentifyOracle::find(int v) const {
  while (parent_[static_cast<std::size_t>(v)] != v) {
    parent_[static_cast<std::size_t>(v)] =
        parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
    v = parent_[static_cast<std::size_t>(v)];
  }
  return v;
}

void IdentifyOracle::merge(int u, int v) {
  pending_.emplace_back(u, v);
  process_pending();
}

void IdentifyOracle::process_pending() {
  while (!pending_.empty()) {
    auto [u, v] = pending_.back();
    pending_.pop_back();
    u = find(u);
    v = find(v);
    if (u == v) continue;
    if (u > v) std::swap(u, v);  // keep the smaller node as representative
    parent_[static_cast<std::size_t>(v)] = u;
    for (int slot = 0; slot < 4; ++slot) {
      const int ev = edge_[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot)];
      if (ev == -1) continue;
      int& eu = edge_[static_cast<std::size_t>(u)][static_cast<std::size_t>(slot)];
      if (eu == -1)
        eu = ev;
      else if (find(eu) != find(ev))
        pending_.emplace_back(eu, ev);
    }
  }
}

int IdentifyOracle::node_of(const std::string& word) const {
  const int k = static_cast<int>(alphabet_.size());
  int node = 0;
  for (char letter : word) {
    const auto pos = alphabet_.find(letter);
    if (pos == std::string::npos) throw std::invalid_argument("word uses a letter outside the alphabet");
    node = node * k + 1 + static_cast<int>(pos);
  }
  return node;
}

int IdentifyOracle::class_of(const std::string& word) const {
  if (static_cast<int>(word.size()) > ball_len_)
    throw std::invalid_argument("word longer than oracle ball");
  return find(node_of(word));
}

std::map<std::string, int> IdentifyOracle::partition(int word_len) const {
  std::map<std::string, int> raw;
  std::vector<std::string> frontier = {""};
  raw[""] = class_of("");
  for (int len = 1; len <= word_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      for (char letter : alphabet_) {
        std::string x = w + letter;
        raw[x] = class_of(x);
        next.push_back(std::move(x));
      }
    }
    frontier = std::move(next);
  }
  // Renumber classes by first appearance so partitions from different ball
  // lengths compare with ==.
  std::map<int, int> renum;
  std::map<std::string, int> out;
  for (const auto& [w, c] : raw) {
    auto it = renum.find(c);
    if (it == renum.end()) it = renum.emplace(c, static_cast<int>(renum.size())).first;
    out[w] = it->second;
  }
  return out;
}

std::vector<std::size_t> IdentifyOracle::growth(int radius) const {
  if (radius >= ball_len_) throw std::invalid_argument("radius must be < ball_len");
  std::vector<std::size_t> sizes;
  std::map<int, int> dist;
  std::vector<int> frontier = {class_of("")};
  dist[frontier[0]] = 0;
  sizes.push_back(1);
  for (int d = 1; d <= radius; ++d) {
    std::vector<int> next;
    for (int c : frontier) {
      for (char letter : alphabet_) {
        const int e = edge_[static_cast<std::size_t>(find(c))][static_cast<std::size_t>(slot_of(letter))];
        if (e == -1) continue;
        const int f = find(e);
        if (dist.emplace(f, d).second) next.push_back(f);
      }
    }
    sizes.push_back(next.size());
    frontier = std::move(next);
  }
  return sizes;
}

std::map<std::string, int> stable_partition(const FamilySpec& spec, int word_len, int start_len,
                                            int max_len) {
  if (start_len <= 0) start_len = word_len + 2;
  std::map<std::string, int> prev;
  bool have_prev = false;
  for (int len = start_len; len <= max_len; ++len) {
    IdentifyOracle oracle(spec, len);
    auto part = oracle.partition(word_len);
    if (have_prev && part == prev) return part;
    prev = std::move(part);
    have_prev = true;
  }
  throw Error(ErrorKind::Resource, "identification oracle did not stabilize by ball length " +
                                       std::to_string(max_len));
}

}  // namespace cubicay::testsupport
