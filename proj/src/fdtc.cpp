#include "obtwist/fdtc.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "obtwist/curves.hpp"
#include "obtwist/errors.hpp"
#include "obtwist/mapping.hpp"

namespace obt {

FdtcOptions FdtcOptions::from_env() {
  FdtcOptions opt;
  if (const char* cap = std::getenv("OBTWIST_LENGTH_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(cap, &end, 10);
    if (end && *end == '\0' && v > 0) opt.length_cap = static_cast<std::size_t>(v);
  }
  return opt;
}

std::vector<Syllable> apply_chain_rewrites(const SurfaceModel& m,
                                           std::vector<Syllable> s) {
  s = normalize_syllables(std::move(s));
  bool changed = true;
  while (changed) {
    changed = false;
    for (const ChainRewrite& rw : m.rewrites) {
      const size_t L = static_cast<size_t>(rw.run_length);
      if (s.size() < L) continue;
      for (size_t i = 0; i + L <= s.size() && !changed; ++i) {
        std::int64_t e = s[i].exp;
        if (e != 1 && e != -1) continue;
        bool run = true;
        for (size_t j = 0; j < L && run; ++j) {
          const Syllable& y = s[i + j];
          run = y.exp == e &&
                std::find(rw.gens.begin(), rw.gens.end(), y.gen) != rw.gens.end() &&
                (j == 0 || y.gen != s[i + j - 1].gen);
        }
        if (!run) continue;
        std::vector<Syllable> next(s.begin(), s.begin() + static_cast<long>(i));
        next.push_back(Syllable{rw.target, e});
        next.insert(next.end(), s.begin() + static_cast<long>(i + L), s.end());
        s = normalize_syllables(std::move(next));
        changed = true;
      }
      if (changed) break;
    }
  }
  return s;
}

std::vector<Syllable> strip_boundary_twists(const SurfaceModel& m,
                                            std::vector<Syllable> s,
                                            const std::string& boundary,
                                            long long* offset) {
  long long sum = 0;
  auto iso = m.boundary_parallel.find(boundary);
  if (iso != m.boundary_parallel.end()) {
    std::vector<Syllable> keep;
    keep.reserve(s.size());
    for (const Syllable& y : s) {
      if (std::find(iso->second.begin(), iso->second.end(), y.gen) !=
          iso->second.end()) {
        sum += y.exp;
      } else {
        keep.push_back(y);
      }
    }
    s = normalize_syllables(std::move(keep));
  }
  if (offset) *offset = sum;
  return s;
}

namespace {

// Longest hugging run of the letters at the arc's start: the signed turn
// count, with `matched` reporting how many letters hugged so callers can tell
// whether the run ended inside a truncated prefix.
Rational hug_progress(const SurfaceModel& m, const ArcEnd& start,
                      const std::vector<Letter>& letters, size_t* matched) {
  const BoundaryInfo& bi = m.boundaries[static_cast<size_t>(start.boundary)];
  std::vector<Letter> pos = bi.cycle_from_mark(start.mark);
  std::vector<Letter> neg = bi.neg_cycle_from_mark(start.mark);
  const size_t n = pos.size();
  size_t lp = 0, ln = 0;
  while (lp < letters.size() && letters[lp] == pos[lp % n]) ++lp;
  while (ln < letters.size() && letters[ln] == neg[ln % n]) ++ln;
  *matched = lp > ln ? lp : ln;
  if (lp > 0)
    return Rational(static_cast<long long>(lp), static_cast<long long>(n));
  if (ln > 0)
    return Rational(-static_cast<long long>(ln), static_cast<long long>(n));
  return Rational(0);
}

// Collar count of the word's image of the boundary's spanning arc.  Long
// images are computed as prefixes; a truncated measurement is only accepted
// once two successive prefix lengths agree on the turn count.
long long measure(const SurfaceModel& m, int h, const TwistWord& w,
                  const std::string& boundary, size_t length_cap,
                  TwistCache* cache) {
  const ArcWord& alpha = m.test_arcs.at(boundary);
  size_t base_matched = 0;
  Rational f_base =
      hug_progress(m, alpha.start, free_reduce(alpha.letters), &base_matched);

  size_t keep = 4096;
  if (keep > length_cap) keep = length_cap;
  Rational f_prev;
  bool have_prev = false;
  for (;;) {
    PrefixArc img =
        apply_class_prefix(m, h, w, PrefixArc{alpha.letters, true}, alpha,
                           keep, cache);
    size_t matched = 0;
    Rational f = hug_progress(m, alpha.start, img.letters, &matched);
    if (img.complete) {
      Rational d = f - f_base;
      return d.num / d.den;  // toward zero
    }
    if (matched < img.letters.size()) {
      // hugging run ended inside the prefix; confirm at the next length
      if (have_prev && f == f_prev) {
        Rational d = f - f_base;
        return d.num / d.den;
      }
      f_prev = f;
      have_prev = true;
    } else {
      have_prev = false;
    }
    if (keep >= length_cap)
      throw Error(ErrorCode::WordLengthLimit,
                  "image arc exceeds the length cap (" +
                      std::to_string(length_cap) + " letters)");
    keep = keep > length_cap / 2 ? length_cap : keep * 2;
  }
}

// All reduced fractions with denominator <= dmax in [lo, hi].
std::vector<Rational> rationals_in(const Rational& lo, const Rational& hi,
                                   long long dmax) {
  std::vector<Rational> out;
  for (long long q = 1; q <= dmax; ++q) {
    Rational lq = lo * Rational(q);
    Rational hq = hi * Rational(q);
    for (long long p = lq.ceil(); p <= hq.floor(); ++p) {
      Rational r(p, q);
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
  }
  return out;
}

TwistWord word_power(const SurfaceModel& m, const std::vector<Syllable>& s,
                     long long k) {
  TwistWord wk;
  wk.surface = m.id;
  wk.syllables.reserve(s.size() * static_cast<size_t>(k));
  for (long long i = 0; i < k; ++i)
    wk.syllables.insert(wk.syllables.end(), s.begin(), s.end());
  wk.syllables = normalize_syllables(std::move(wk.syllables));
  return wk;
}

}  // namespace

long long fdtc_measure(const Catalog& cat, const std::string& surface,
                       const TwistWord& w, const std::string& boundary,
                       long long k, const FdtcOptions& opt) {
  const SurfaceModel& m = cat.get(surface);
  check_word(m, w);
  (void)m.boundary_index(boundary);
  if (k < 1)
    throw Error(ErrorCode::Internal, "iterate count must be positive");
  TwistCache cache(m);
  TwistWord wk = word_power(m, normalize_syllables(w.syllables), k);
  return measure(m, cat.handedness, wk, boundary, opt.length_cap, &cache);
}

FdtcResult fdtc(const Catalog& cat, const std::string& surface,
                const TwistWord& w, const std::string& boundary,
                const FdtcOptions& opt) {
  const SurfaceModel& m = cat.get(surface);
  check_word(m, w);
  (void)m.boundary_index(boundary);

  long long offset = 0;
  std::vector<Syllable> s =
      apply_chain_rewrites(m, normalize_syllables(w.syllables));
  s = strip_boundary_twists(m, s, boundary, &offset);

  FdtcResult res;
  const Rational off(offset);
  // Twists parallel to the target boundary are central and shift the
  // coefficient by their exponent sum; on a planar surface nothing else can
  // contribute, so the stripped remainder (twists parallel to the other
  // boundaries) adds zero.
  if (m.planar || s.empty()) {
    res.resolved = true;
    res.value = off;
    res.lo = res.hi = off;
    res.k_used = 0;
    return res;
  }

  TwistCache cache(m);
  Rational lo, hi;
  bool have = false;
  for (long long k = 1; k <= opt.k_max; k *= 2) {
    long long c = measure(m, cat.handedness, word_power(m, s, k), boundary,
                          opt.length_cap, &cache);
    Rational klo(c - 1, k), khi(c + 1, k);
    if (!have) {
      lo = klo;
      hi = khi;
      have = true;
    } else {
      if (klo > lo) lo = klo;
      if (khi < hi) hi = khi;
    }
    if (hi < lo)
      throw Error(ErrorCode::Internal, "iterate brackets are incompatible");
    res.k_used = k;
    std::vector<Rational> cands = rationals_in(lo, hi, opt.denom_bound);
    if (cands.size() == 1) {
      res.resolved = true;
      res.value = cands.front() + off;
      res.lo = lo + off;
      res.hi = hi + off;
      return res;
    }
  }
  res.resolved = false;
  res.value = Rational(0);
  res.lo = lo + off;
  res.hi = hi + off;
  return res;
}

}  // namespace obt
