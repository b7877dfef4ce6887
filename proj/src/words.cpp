#include "obtwist/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace obt {

std::vector<Letter> inverse_word(const std::vector<Letter>& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

std::vector<Letter> free_reduce(const std::vector<Letter>& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::vector<Letter> cyclic_reduce(const std::vector<Letter>& w) {
  std::vector<Letter> r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) { ++lo; --hi; }
  return std::vector<Letter>(r.begin() + lo, r.begin() + hi);
}

std::vector<Letter> rotate_word(const std::vector<Letter>& w, std::size_t by) {
  if (w.empty()) return w;
  by %= w.size();
  std::vector<Letter> out(w.begin() + by, w.end());
  out.insert(out.end(), w.begin(), w.begin() + by);
  return out;
}

std::vector<Letter> canonical_cyclic(const std::vector<Letter>& w0) {
  std::vector<Letter> w = cyclic_reduce(w0);
  if (w.empty()) return w;
  std::vector<Letter> best;
  for (const std::vector<Letter>& base : {w, inverse_word(w)}) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::vector<Letter> rot = rotate_word(base, i);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

std::vector<Syllable> normalize_syllables(std::vector<Syllable> s) {
  std::vector<Syllable> out;
  for (auto& syl : s) {
    if (syl.exp == 0) continue;
    if (!out.empty() && out.back().gen == syl.gen) {
      out.back().exp += syl.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(std::move(syl));
    }
  }
  return out;
}

std::vector<Syllable> inverse_syllables(const std::vector<Syllable>& s) {
  std::vector<Syllable> out;
  out.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() { return text[pos]; }

  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::ParseError,
                "word parse error at offset " + std::to_string(pos) + ": " + why);
  }

  std::int64_t parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return std::strtoll(text.substr(start, pos - start).c_str(), nullptr, 10);
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected generator name");
    return text.substr(start, pos - start);
  }

  // atom := name | '(' word ')'
  // term := atom ('^' int)?
  void parse_term(std::vector<Syllable>& out) {
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      std::vector<Syllable> inner = parse_word();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      std::int64_t e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        e = parse_int();
        if (e == 0) fail("zero exponent forbidden");
      }
      if (e < 0) { inner = inverse_syllables(inner); e = -e; }
      if (e > 100000) fail("parenthesized power too large to expand");
      for (std::int64_t i = 0; i < e; ++i)
        out.insert(out.end(), inner.begin(), inner.end());
      return;
    }
    std::string name = parse_name();
    std::int64_t e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = parse_int();
      if (e == 0) fail("zero exponent forbidden");
    }
    if (name == "1") {
      // identity atom; exponent irrelevant
      return;
    }
    out.push_back({name, e});
  }

  std::vector<Syllable> parse_word() {
    std::vector<Syllable> out;
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] == ')') break;
      if (text[pos] == '*') { ++pos; continue; }
      parse_term(out);
    }
    return out;
  }
};

}  // namespace

std::vector<Syllable> parse_word_text(const std::string& text) {
  Parser p(text);
  std::vector<Syllable> out = p.parse_word();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return normalize_syllables(std::move(out));
}

std::string print_syllables(const std::vector<Syllable>& s) {
  if (s.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += "*";
    out += s[i].gen;
    if (s[i].exp != 1) out += "^" + std::to_string(s[i].exp);
  }
  return out;
}

}  // namespace obt
