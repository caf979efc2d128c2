#pragma once

#include <string>
#include <vector>

#include "cubicay/word.hpp"

namespace cubicay {

enum class FamilyId { P1, P2, P3, P4, P5, P6, P7 };

// One of the seven presentation families:
//   P1: <a,b | b^2, (ba)^n>              n >= 2
//   P2: <a,b | b^2, (ba^-1ba)^n>         n >= 1
//   P3: <a,b,c | a^2,b^2,c^2,(ba)^n,(bc)^m>   n,m >= 2
//   P4: <a,b,c | a^2,b^2,c^2,(bcba)^n>   n >= 1
//   P5: <a,b | b^2, a^(2n), (ba^n)^m>    n,m >= 2
//   P6: <a,b,c | a^2,b^2,c^2,(bc)^(2n),(a(bc)^n)^m>   n >= 1, m >= 2
//   P7: <a,b,c | a^2,b^2,c^2,(a(bc)^n b)^m>           n >= 1, m >= 2
struct FamilySpec {
  FamilyId family = FamilyId::P1;
  int n = 0;
  int m = 0;  // unused for P1, P2, P4

  // Throws InvalidParameters on degenerate values, naming the collapsed relator.
  void validate() const;

  bool has_m() const;
  bool three_generators() const;       // P3, P4, P6, P7
  bool a_is_involution() const;        // same families as three_generators()
  std::string alphabet() const;        // "aAb" or "abc", in shortlex order
  char inverse_of(char letter) const;
  Word invert(const Word& w) const;
  // Surface words may not contain 'A' when a is an involution; it folds to 'a'.
  Word normalize_surface(const Word& w) const;

  std::vector<Word> relators() const;
  std::string name() const;            // "P1".."P7"
  std::string presentation() const;    // printable relator list
};

FamilyId family_from_name(const std::string& name);
FamilySpec make_spec(FamilyId family, int n, int m = 0);

}  // namespace cubicay
