#pragma once

#include <array>
#include <vector>

#include "cubicay/family.hpp"
#include "cubicay/word.hpp"

namespace cubicay {

struct Rule {
  Word lhs;
  Word rhs;  // smaller than lhs under the system's reduction order
};

struct ElementOrder {
  bool bounded = false;
  int value = 0;  // the order when bounded, otherwise the cap that was hit
};

// Reduction order used by completion. Plain shortlex with ranks a < A < b < c
// is the default; families whose completion diverges under it use a variant
// (letter counts compared first, or permuted ranks). The order never affects
// correctness of normal forms, only which finite confluent system is reached.
struct RewriteOrder {
  // Letter counts compared in priority sequence before length; e.g. "bA" means
  // fewer b's wins, then fewer A's. 'a' counts both a and A.
  std::string count_first;
  std::array<int, 4> rank = {0, 1, 2, 3};  // comparison ranks of a, A, b, c

  bool less(const Word& u, const Word& v) const;
};

// How a family's word problem is realized. Most families complete directly
// over the surface alphabet. P6/P7 with even m have no finite confluent
// system over {a,b,c} under any order tried (see ledger); they rewrite inside
// the index-2 subgroup H = <a, bab, bc> (Reidemeister-Schreier presentation)
// with internal letters a=bc, A=cb, b=a, c=bab, and surface words fold into
// (H-word, coset parity).
struct EngineConfig {
  bool parity_subgroup = false;
  RewriteOrder order;
};

EngineConfig engine_config(const FamilySpec& spec);

// Confluent rewriting system for one presentation family, produced by
// Knuth-Bendix completion. Immutable after completion; all queries are pure.
class RewriteSystem {
public:
  // Deterministic completion: critical pairs are processed in order of their
  // superposition words (under the family's reduction order). Throws
  // CompletionOverflow if more than rule_cap rules get generated.
  static RewriteSystem complete(const FamilySpec& spec, int rule_cap = 2000);

  const FamilySpec& spec() const { return spec_; }
  const EngineConfig& config() const { return config_; }
  const std::vector<Rule>& rules() const { return rules_; }
  bool is_complete() const { return complete_; }

  // Unique irreducible representative of w's element; idempotent.
  Word normal_form(const Word& w) const;
  Word multiply(const Word& u, const Word& v) const { return normal_form(u + v); }
  Word invert(const Word& u) const { return normal_form(spec_.invert(u)); }
  // Least k <= cap with w^k = identity, else unbounded at cap.
  ElementOrder element_order(const Word& w, int cap) const;

private:
  RewriteSystem(const FamilySpec& spec, const EngineConfig& config)
      : spec_(spec), config_(config) {}
  void rebuild_index();
  Word reduce_indexed(Word w) const;

  FamilySpec spec_;
  EngineConfig config_;
  std::vector<Rule> rules_;  // sorted by order on lhs
  bool complete_ = false;
  std::array<std::vector<int>, 4> index_;  // by first lhs letter, longest lhs first
  std::size_t max_lhs_ = 0;
};

}  // namespace cubicay
