#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "obtwist/errors.hpp"

namespace obt {

// A letter records one signed crossing of a cut arc of the surface polygon.
// Letter +k (k >= 1) crosses cut k-1 in the positive direction, -k crosses it
// in the negative direction.  Words in these letters are elements of the free
// group on the cuts; curves are cyclic words, arcs are linear words.
using Letter = std::int32_t;

inline Letter inverse_letter(Letter l) { return -l; }
inline int letter_cut(Letter l) { return (l > 0 ? l : -l) - 1; }
inline int letter_dir(Letter l) { return l > 0 ? +1 : -1; }

std::vector<Letter> inverse_word(const std::vector<Letter>& w);

// Remove adjacent cancelling pairs until none remain.
std::vector<Letter> free_reduce(const std::vector<Letter>& w);

// Free reduce, then also cancel across the wrap-around point.
std::vector<Letter> cyclic_reduce(const std::vector<Letter>& w);

std::vector<Letter> rotate_word(const std::vector<Letter>& w, std::size_t by);

// Least rotation (lexicographic on letters) over both orientations of a
// cyclically reduced word.  Two cyclic words are equal as unoriented curves
// iff their canonical forms match.
std::vector<Letter> canonical_cyclic(const std::vector<Letter>& w);

// Endpoint of an arc: marked point `mark` on boundary component `boundary`.
struct ArcEnd {
  int boundary = 0;
  int mark = 0;
  friend bool operator==(const ArcEnd& a, const ArcEnd& b) {
    return a.boundary == b.boundary && a.mark == b.mark;
  }
};

struct CurveWord {
  std::string surface;
  std::vector<Letter> letters;  // cyclic
};

struct ArcWord {
  std::string surface;
  std::vector<Letter> letters;  // linear, freely reduced
  ArcEnd start;
  ArcEnd end;
};

// Mapping-class words: products of Dehn twists along named catalog curves.
struct Syllable {
  std::string gen;
  std::int64_t exp = 1;
  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
};

struct TwistWord {
  std::string surface;
  std::vector<Syllable> syllables;
};

// Merge adjacent equal-generator syllables and drop zero exponents.
std::vector<Syllable> normalize_syllables(std::vector<Syllable> s);

std::vector<Syllable> inverse_syllables(const std::vector<Syllable>& s);

// Parse the textual word grammar (see docs/FORMAT.md): `*`-separated terms,
// each `gen`, `gen^int`, or `(word)^int`.  Empty input and "1" denote the
// identity.  Throws ParseError on syntax errors.  Generator names are not
// validated here; the catalog layer checks them against the surface.
std::vector<Syllable> parse_word_text(const std::string& text);

std::string print_syllables(const std::vector<Syllable>& s);

}  // namespace obt
