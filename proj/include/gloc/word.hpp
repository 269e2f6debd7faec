#pragma once

// Words over an abstract generating set: signed indices, 1-based, negative
// for inverses. ASCII form uses letters, capital for inverse ("a b A B"),
// which caps presentations at 26 generators; the bundled data never needs
// more than a handful.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "perm.hpp"

namespace gloc {

using Word = std::vector<std::int32_t>;

struct Presentation {
  std::uint32_t n_generators = 0;
  std::vector<Word> relators;
};

inline void validate_word(const Word& w, std::uint32_t n_generators) {
  for (std::int32_t x : w) {
    std::int32_t a = x < 0 ? -x : x;
    if (a < 1 || static_cast<std::uint32_t>(a) > n_generators)
      throw std::invalid_argument("word letter out of range");
  }
}

inline Word parse_word(const std::string& text) {
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == '\t') continue;
    if (c >= 'a' && c <= 'z')
      w.push_back(c - 'a' + 1);
    else if (c >= 'A' && c <= 'Z')
      w.push_back(-(c - 'A' + 1));
    else
      throw ParseError("bad word character", i);
  }
  return w;
}

inline std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    std::int32_t x = w[i];
    if (x > 26 || x < -26 || x == 0)
      throw std::invalid_argument("letter outside a..z range");
    s += x > 0 ? static_cast<char>('a' + x - 1)
               : static_cast<char>('A' - x - 1);
  }
  return s;
}

inline Word free_reduce(const Word& w) {
  Word out;
  for (std::int32_t x : w) {
    if (x == 0) throw std::invalid_argument("zero letter");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

inline Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) out.push_back(-w[i]);
  return out;
}

inline Perm evaluate(const Word& w, const std::vector<Perm>& images) {
  if (images.empty()) throw std::invalid_argument("no generator images");
  Perm acc = Perm::identity(images[0].degree());
  for (std::int32_t x : w) {
    std::size_t a = static_cast<std::size_t>(x < 0 ? -x : x);
    if (a < 1 || a > images.size())
      throw std::invalid_argument("word letter out of range");
    acc = x > 0 ? acc * images[a - 1] : acc * images[a - 1].inverse();
  }
  return acc;
}

inline bool check_relators(const Presentation& p,
                           const std::vector<Perm>& images) {
  if (images.size() != p.n_generators)
    throw std::invalid_argument("generator count mismatch");
  for (std::size_t i = 1; i < images.size(); ++i)
    if (images[i].degree() != images[0].degree())
      throw std::invalid_argument("generator degree mismatch");
  for (const Word& r : p.relators) {
    validate_word(r, p.n_generators);
    if (r.empty()) continue;
    if (!evaluate(r, images).is_identity()) return false;
  }
  return true;
}

}  // namespace gloc
