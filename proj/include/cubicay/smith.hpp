#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubicay/family.hpp"

namespace cubicay {

// Invariant factors of a finitely generated abelian group: free rank plus a
// torsion chain d1 | d2 | ... with every di >= 2.
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool operator==(const AbelianInvariants&) const = default;
  std::string str() const;
};

// Smith normal form of an integer matrix (rows = relations, columns =
// generators); returns the cokernel invariants.
AbelianInvariants smith_invariants(std::vector<std::vector<std::int64_t>> matrix, int columns);

// Exponent-sum relation matrix of a family presentation, then Smith.
AbelianInvariants abelianization(const FamilySpec& spec);

// Exponent row of a word over an ordered generator list ("a","b","c" or "a","b").
std::vector<std::int64_t> exponent_row(const Word& word, int generators);

}  // namespace cubicay
