#include "cubicay/rewrite.hpp"

#include <algorithm>
#include <set>

#include "cubicay/errors.hpp"

namespace cubicay {

bool RewriteOrder::less(const Word& u, const Word& v) const {
  for (char key : count_first) {
    std::size_t cu = 0, cv = 0;
    const bool with_inverse = (key == 'a');
    for (char ch : u) cu += (ch == key || (with_inverse && ch == 'A'));
    for (char ch : v) cv += (ch == key || (with_inverse && ch == 'A'));
    if (cu != cv) return cu < cv;
  }
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i])
      return rank[static_cast<std::size_t>(letter_rank(u[i]))] <
             rank[static_cast<std::size_t>(letter_rank(v[i]))];
  }
  return false;
}

EngineConfig engine_config(const FamilySpec& spec) {
  EngineConfig cfg;
  switch (spec.family) {
    case FamilyId::P1:
    case FamilyId::P2:
    case FamilyId::P3:
      break;  // plain shortlex, a < A < b < c
    case FamilyId::P4:
      // Plain shortlex diverges for even n (rule family b(abc)^k b -> (cba)^k);
      // ranking b < a < c completes with a small system for all n.
      cfg.order.rank = {1, 3, 0, 2};
      break;
    case FamilyId::P5:
      // Z_2n *_{Z_2} D_2m: minimize b-crossings, then write a-powers
      // positively; plain shortlex diverges from n = 3 on.
      cfg.order.count_first = "bA";
      break;
    case FamilyId::P6:
      if (spec.m % 2 == 1) {
        cfg.order.count_first = "a";  // Britton-style, completes for odd m
      } else {
        cfg.parity_subgroup = true;     // index-2 subgroup backend
        cfg.order.count_first = "bcA";  // x,y-crossings first, then positive d-powers
      }
      break;
    case FamilyId::P7:
      if (spec.m % 2 == 1) {
        cfg.order.count_first = "a";
      } else {
        // With y' = d^n (bab) d^-n the subgroup presents as D_m * Z; plain
        // shortlex completes it.
        cfg.parity_subgroup = true;
      }
      break;
  }
  return cfg;
}

namespace {

// --- index-2 subgroup transduction (P6/P7, even m) ---
//
// Coset reps {1, b}; Schreier generators d = bc (inverse cb) in engine letter
// slots a/A, x = a in slot b, and in slot c either y = bab (P6) or the Tietze
// replacement y' = d^n (bab) d^-n (P7), which turns the P7 subgroup into
// D_m * Z.

// surface word -> (H-word, coset parity)
std::pair<Word, int> fold_parity(const FamilySpec& spec, const Word& w) {
  const bool shifted = spec.family == FamilyId::P7;
  const Word y_word = shifted ? Word(static_cast<std::size_t>(spec.n), 'A') + "c" +
                                    Word(static_cast<std::size_t>(spec.n), 'a')
                              : Word("c");
  Word h;
  int p = 0;
  for (char ch : w) {
    switch (ch) {
      case 'a': h += p ? y_word : Word("b"); break;
      case 'b': p ^= 1; break;
      case 'c':
        h += (p ? 'a' : 'A');
        p ^= 1;
        break;
      default: throw BadParameter("fold: bad surface letter");
    }
  }
  return {h, p};
}

Word expand_parity(const FamilySpec& spec, const Word& h, int parity) {
  const bool shifted = spec.family == FamilyId::P7;
  Word y_surface = "bab";
  if (shifted) {
    y_surface = repeat_word("bc", spec.n) + "bab" + repeat_word("cb", spec.n);
  }
  Word w;
  for (char ch : h) {
    switch (ch) {
      case 'b': w += 'a'; break;
      case 'c': w += y_surface; break;
      case 'a': w += "bc"; break;
      case 'A': w += "cb"; break;
    }
  }
  if (parity) w += 'b';
  return w;
}

// Reidemeister-Schreier relators: folds of every surface relator traced from
// both cosets.
std::vector<Word> parity_relators(const FamilySpec& spec) {
  std::vector<Word> rel;
  for (const Word& r : spec.relators()) {
    auto [h0, p0] = fold_parity(spec, r);
    if (p0 != 0) throw BadParameter("relator leaves the index-2 subgroup");
    if (!h0.empty()) rel.push_back(h0);
    auto [h1, p1] = fold_parity(spec, "b" + r + "b");  // trace from the other coset
    if (p1 == 0 && !h1.empty()) rel.push_back(h1);
  }
  return rel;
}

struct Equation {
  Word key;  // superposition word the equation arose from
  Word lhs;
  Word rhs;
};

struct EquationLess {
  const RewriteOrder* order;
  bool operator()(const Equation& a, const Equation& b) const {
    if (a.key != b.key) return order->less(a.key, b.key);
    if (a.lhs != b.lhs) return order->less(a.lhs, b.lhs);
    return order->less(a.rhs, b.rhs);
  }
};

// Leftmost position, longest matching lhs. Distinct rules never share an lhs,
// so the choice is unique.
Word reduce_naive(const std::vector<Rule>& rules, Word w) {
  std::size_t max_lhs = 0;
  for (const Rule& r : rules) max_lhs = std::max(max_lhs, r.lhs.size());
  std::size_t pos = 0;
  while (pos < w.size()) {
    const Rule* hit = nullptr;
    for (const Rule& r : rules) {
      if (r.lhs.size() > w.size() - pos) continue;
      if (hit && r.lhs.size() <= hit->lhs.size()) continue;
      if (w.compare(pos, r.lhs.size(), r.lhs) == 0) hit = &r;
    }
    if (!hit) {
      ++pos;
      continue;
    }
    w = w.substr(0, pos) + hit->rhs + w.substr(pos + hit->lhs.size());
    pos = pos < max_lhs ? 0 : pos - max_lhs + 1;
  }
  return w;
}

bool contains(const Word& hay, const Word& needle) {
  return hay.find(needle) != Word::npos;
}

// Critical pairs of l1->r1 with l2->r2: containments of l2 in l1 and proper
// suffix/prefix overlaps.
void push_overlaps(const Rule& a, const Rule& b, std::set<Equation, EquationLess>& agenda) {
  const Word& l1 = a.lhs;
  const Word& l2 = b.lhs;
  if (l2.size() <= l1.size()) {
    for (std::size_t i = 0; i + l2.size() <= l1.size(); ++i) {
      if (i == 0 && l2.size() == l1.size()) continue;  // identical lhs impossible
      if (l1.compare(i, l2.size(), l2) != 0) continue;
      agenda.insert({l1, a.rhs, l1.substr(0, i) + b.rhs + l1.substr(i + l2.size())});
    }
  }
  const std::size_t tmax = std::min(l1.size(), l2.size()) - 1;
  for (std::size_t t = 1; t <= tmax; ++t) {
    if (l1.compare(l1.size() - t, t, l2, 0, t) != 0) continue;
    const Word sup = l1 + l2.substr(t);
    agenda.insert({sup, a.rhs + l2.substr(t), l1.substr(0, l1.size() - t) + b.rhs});
  }
}

// Huet-style completion; equations processed in order of superposition words.
std::vector<Rule> knuth_bendix(const std::vector<Word>& relators, bool seed_a_inverses,
                               const RewriteOrder& order, int rule_cap) {
  std::set<Equation, EquationLess> agenda{EquationLess{&order}};
  for (const Word& r : relators) agenda.insert({r, r, ""});
  if (seed_a_inverses) {
    agenda.insert({"aA", "aA", ""});
    agenda.insert({"Aa", "Aa", ""});
  }

  std::vector<Rule> active;
  int generated = 0;
  while (!agenda.empty()) {
    Equation eq = *agenda.begin();
    agenda.erase(agenda.begin());
    Word l = reduce_naive(active, eq.lhs);
    Word r = reduce_naive(active, eq.rhs);
    if (l == r) continue;
    if (order.less(l, r)) std::swap(l, r);

    // Inter-reduce: rules whose lhs the new rule rewrites go back on the agenda.
    std::vector<Rule> kept;
    kept.reserve(active.size() + 1);
    for (Rule& old : active) {
      if (contains(old.lhs, l))
        agenda.insert({old.lhs, old.lhs, old.rhs});
      else
        kept.push_back(std::move(old));
    }
    kept.push_back({l, r});
    if (++generated > rule_cap) throw CompletionOverflow(rule_cap);
    active = std::move(kept);
    for (Rule& rule : active) rule.rhs = reduce_naive(active, rule.rhs);

    const Rule& fresh = active.back();
    for (const Rule& other : active) {
      push_overlaps(fresh, other, agenda);
      if (&other != &fresh) push_overlaps(other, fresh, agenda);
    }
  }
  return active;
}

}  // namespace

RewriteSystem RewriteSystem::complete(const FamilySpec& spec, int rule_cap) {
  spec.validate();
  if (rule_cap < 1) throw BadParameter("rule_cap must be >= 1");
  RewriteSystem rs(spec, engine_config(spec));

  std::vector<Word> relators;
  bool seed_inverses;
  if (rs.config_.parity_subgroup) {
    relators = parity_relators(spec);
    seed_inverses = true;  // internal letter a = bc has inverse A = cb
  } else {
    relators = spec.relators();
    seed_inverses = !spec.a_is_involution();
  }

  std::vector<Rule> rules = knuth_bendix(relators, seed_inverses, rs.config_.order, rule_cap);
  std::sort(rules.begin(), rules.end(), [&rs](const Rule& x, const Rule& y) {
    return rs.config_.order.less(x.lhs, y.lhs);
  });
  rs.rules_ = std::move(rules);
  rs.complete_ = true;
  rs.rebuild_index();
  return rs;
}

void RewriteSystem::rebuild_index() {
  for (auto& bucket : index_) bucket.clear();
  max_lhs_ = 0;
  for (int i = 0; i < static_cast<int>(rules_.size()); ++i) {
    const Word& lhs = rules_[static_cast<std::size_t>(i)].lhs;
    index_[static_cast<std::size_t>(letter_rank(lhs[0]))].push_back(i);
    max_lhs_ = std::max(max_lhs_, lhs.size());
  }
  for (auto& bucket : index_) {
    std::sort(bucket.begin(), bucket.end(), [this](int x, int y) {
      return rules_[static_cast<std::size_t>(x)].lhs.size() >
             rules_[static_cast<std::size_t>(y)].lhs.size();
    });
  }
}

Word RewriteSystem::reduce_indexed(Word cur) const {
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const auto& bucket = index_[static_cast<std::size_t>(letter_rank(cur[pos]))];
    const Rule* hit = nullptr;
    for (int idx : bucket) {
      const Rule& r = rules_[static_cast<std::size_t>(idx)];
      if (r.lhs.size() > cur.size() - pos) continue;
      if (cur.compare(pos, r.lhs.size(), r.lhs) == 0) {
        hit = &r;
        break;  // buckets are longest-first
      }
    }
    if (!hit) {
      ++pos;
      continue;
    }
    cur = cur.substr(0, pos) + hit->rhs + cur.substr(pos + hit->lhs.size());
    pos = pos < max_lhs_ ? 0 : pos - max_lhs_ + 1;
  }
  return cur;
}

Word RewriteSystem::normal_form(const Word& w) const {
  const Word surface = spec_.normalize_surface(w);
  if (!config_.parity_subgroup) return reduce_indexed(surface);
  auto [h, parity] = fold_parity(spec_, surface);
  return expand_parity(spec_, reduce_indexed(std::move(h)), parity);
}

ElementOrder RewriteSystem::element_order(const Word& w, int cap) const {
  if (cap < 1) throw BadParameter("order cap must be >= 1");
  const Word base = normal_form(w);
  Word acc = base;
  for (int k = 1; k <= cap; ++k) {
    if (acc.empty()) return {true, k};
    acc = normal_form(acc + base);
  }
  return {false, cap};
}

}  // namespace cubicay
