#include "cubicay/family.hpp"

#include "cubicay/errors.hpp"

namespace cubicay {
namespace {

Word bc_block(int n) { return repeat_word("bc", n); }

}  // namespace

void FamilySpec::validate() const {
  auto fail = [](const std::string& msg) { throw InvalidParameters(msg); };
  switch (family) {
    case FamilyId::P1:
      if (n < 2) fail("P1 requires n >= 2: relator (ba)^" + std::to_string(n) + " collapses a onto b^-1");
      break;
    case FamilyId::P2:
      if (n < 1) fail("P2 requires n >= 1: relator (ba^-1ba)^" + std::to_string(n) + " is empty");
      break;
    case FamilyId::P3:
      if (n < 2) fail("P3 requires n >= 2: relator (ba)^" + std::to_string(n) + " collapses a onto b");
      if (m < 2) fail("P3 requires m >= 2: relator (bc)^" + std::to_string(m) + " collapses c onto b");
      break;
    case FamilyId::P4:
      if (n < 1) fail("P4 requires n >= 1: relator (bcba)^" + std::to_string(n) + " is empty");
      break;
    case FamilyId::P5:
      if (n < 2) fail("P5 requires n >= 2: relator a^" + std::to_string(2 * n) + " makes a an involution");
      if (m < 2) fail("P5 requires m >= 2: relator (ba^n)^" + std::to_string(m) + " collapses b onto a^-n");
      break;
    case FamilyId::P6:
      if (n < 1) fail("P6 requires n >= 1: relator (bc)^" + std::to_string(2 * n) + " collapses c onto b");
      if (m < 2) fail("P6 requires m >= 2: relator (a(bc)^n)^" + std::to_string(m) + " collapses a onto (cb)^n");
      break;
    case FamilyId::P7:
      if (n < 1) fail("P7 requires n >= 1: relator (a(bc)^0 b)^m degenerates to (ab)^m");
      if (m < 2) fail("P7 requires m >= 2: relator (a(bc)^n b)^" + std::to_string(m) + " collapses a onto ((bc)^n b)^-1");
      break;
  }
}

bool FamilySpec::has_m() const {
  return family == FamilyId::P3 || family == FamilyId::P5 || family == FamilyId::P6 ||
         family == FamilyId::P7;
}

bool FamilySpec::three_generators() const {
  return family == FamilyId::P3 || family == FamilyId::P4 || family == FamilyId::P6 ||
         family == FamilyId::P7;
}

bool FamilySpec::a_is_involution() const { return three_generators(); }

std::string FamilySpec::alphabet() const { return three_generators() ? "abc" : "aAb"; }

char FamilySpec::inverse_of(char letter) const {
  switch (letter) {
    case 'a': return a_is_involution() ? 'a' : 'A';
    case 'A': return 'a';
    case 'b': return 'b';
    case 'c': return 'c';
  }
  throw BadParameter(std::string("not a generator letter: ") + letter);
}

Word FamilySpec::invert(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_of(*it));
  return out;
}

Word FamilySpec::normalize_surface(const Word& w) const {
  Word out = w;
  if (a_is_involution()) {
    for (char& ch : out)
      if (ch == 'A') ch = 'a';
  }
  for (char ch : out)
    if (!is_alphabet_letter(ch) || (ch == 'c' && !three_generators()))
      throw BadParameter(std::string("letter '") + ch + "' is not in the alphabet of " + name());
  return out;
}

std::vector<Word> FamilySpec::relators() const {
  switch (family) {
    case FamilyId::P1:
      return {"bb", repeat_word("ba", n)};
    case FamilyId::P2:
      return {"bb", repeat_word("bAba", n)};
    case FamilyId::P3:
      return {"aa", "bb", "cc", repeat_word("ba", n), repeat_word("bc", m)};
    case FamilyId::P4:
      return {"aa", "bb", "cc", repeat_word("bcba", n)};
    case FamilyId::P5:
      return {"bb", Word(static_cast<std::size_t>(2 * n), 'a'),
              repeat_word("b" + Word(static_cast<std::size_t>(n), 'a'), m)};
    case FamilyId::P6:
      return {"aa", "bb", "cc", bc_block(2 * n), repeat_word("a" + bc_block(n), m)};
    case FamilyId::P7:
      return {"aa", "bb", "cc", repeat_word("a" + bc_block(n) + "b", m)};
  }
  throw BadParameter("unreachable family");
}

std::string FamilySpec::name() const {
  static const char* names[] = {"P1", "P2", "P3", "P4", "P5", "P6", "P7"};
  return names[static_cast<int>(family)];
}

std::string FamilySpec::presentation() const {
  std::string gens = three_generators() ? "a,b,c" : "a,b";
  std::string rel;
  for (const Word& r : relators()) {
    if (!rel.empty()) rel += ", ";
    rel += r;
  }
  return "<" + gens + " | " + rel + ">";
}

FamilyId family_from_name(const std::string& name) {
  if (name.size() == 2 && name[0] == 'P' && name[1] >= '1' && name[1] <= '7')
    return static_cast<FamilyId>(name[1] - '1');
  throw InvalidParameters("unknown family name: " + name + " (expected P1..P7)");
}

FamilySpec make_spec(FamilyId family, int n, int m) {
  FamilySpec spec;
  spec.family = family;
  spec.n = n;
  spec.m = m;
  spec.validate();
  return spec;
}

}  // namespace cubicay
