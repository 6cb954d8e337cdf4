#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidscope {

/// A word in a free group: signed 1-based generator letters, +(i+1) for
/// generator i and -(i+1) for its inverse. The empty word is the
/// identity.
using Word = std::vector<int>;

inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0) throw std::invalid_argument("free_reduce: zero letter");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

inline Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

/// Free reduction followed by removal of cancelling first/last letters;
/// the result represents the same conjugacy class.
inline Word cyclic_reduce(const Word& w) {
  Word out = free_reduce(w);
  size_t i = 0, j = out.size();
  while (j - i >= 2 && out[i] == -out[j - 1]) {
    ++i;
    --j;
  }
  return Word(out.begin() + i, out.begin() + j);
}

/// Replaces every occurrence of generator gen (0-based) by repl, and of
/// its inverse by repl's inverse, then freely reduces.
inline Word substitute_generator(const Word& w, int gen, const Word& repl) {
  Word out;
  out.reserve(w.size() + repl.size());
  const Word repl_inv = word_inverse(repl);
  for (int letter : w) {
    if (letter == gen + 1)
      out.insert(out.end(), repl.begin(), repl.end());
    else if (letter == -(gen + 1))
      out.insert(out.end(), repl_inv.begin(), repl_inv.end());
    else
      out.push_back(letter);
  }
  return free_reduce(out);
}

inline void validate_word(const Word& w, int generator_count) {
  for (int letter : w) {
    int g = letter > 0 ? letter : -letter;
    if (g < 1 || g > generator_count)
      throw std::out_of_range("word letter references unknown generator");
  }
}

inline std::string word_to_text(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (int letter : w) {
    if (!s.empty()) s += ' ';
    int g = letter > 0 ? letter - 1 : -letter - 1;
    if (g < 0 || g >= static_cast<int>(names.size()))
      throw std::out_of_range("word letter references unknown generator");
    s += names[g];
    if (letter < 0) s += "^-1";
  }
  return s;
}

}  // namespace braidscope
