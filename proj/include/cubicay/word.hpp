#pragma once

#include <string>

namespace cubicay {

// Group words are strings over {a, A, b, c}; 'A' is the inverse of 'a' and the
// empty string is the identity. Fixed symbol order for shortlex: a < A < b < c.
using Word = std::string;

inline int letter_rank(char ch) {
  switch (ch) {
    case 'a': return 0;
    case 'A': return 1;
    case 'b': return 2;
    case 'c': return 3;
    default: return 4 + static_cast<unsigned char>(ch);
  }
}

inline bool is_alphabet_letter(char ch) {
  return ch == 'a' || ch == 'A' || ch == 'b' || ch == 'c';
}

inline bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return letter_rank(u[i]) < letter_rank(v[i]);
  }
  return false;
}

struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

inline Word repeat_word(const Word& w, int times) {
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(times));
  for (int i = 0; i < times; ++i) out += w;
  return out;
}

}  // namespace cubicay
