#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "obtwist/catalog.hpp"
#include "obtwist/rational.hpp"
#include "obtwist/words.hpp"

namespace obt {

struct FdtcOptions {
  long long k_max = 16;
  long long denom_bound = 8;
  std::size_t length_cap = 10000000;  // letters; env OBTWIST_LENGTH_CAP wins

  static FdtcOptions from_env();
};

struct FdtcResult {
  bool resolved = false;
  Rational value{0};      // meaningful when resolved
  Rational lo{0}, hi{0};  // final bracketing interval (always valid)
  long long k_used = 0;
};

// Fractional winding of the mapping class at the named boundary: exact when a
// unique rational with denominator <= denom_bound fits the bracket, otherwise
// unresolved with the bracket reported.
FdtcResult fdtc(const Catalog& cat, const std::string& surface,
                const TwistWord& w, const std::string& boundary,
                const FdtcOptions& opt = {});

// Collar count of the k-th iterate of the class against the boundary's
// spanning arc (the raw measurement the bracket is built from).
long long fdtc_measure(const Catalog& cat, const std::string& surface,
                       const TwistWord& w, const std::string& boundary,
                       long long k, const FdtcOptions& opt = {});

// Replace alternating chain runs by their target twist, repeatedly, anywhere
// in the word.
std::vector<Syllable> apply_chain_rewrites(const SurfaceModel& m,
                                           std::vector<Syllable> s);

// Remove syllables twisting parallel to `boundary` (they are central) and
// accumulate their exponent sum into *offset.
std::vector<Syllable> strip_boundary_twists(const SurfaceModel& m,
                                            std::vector<Syllable> s,
                                            const std::string& boundary,
                                            long long* offset);

}  // namespace obt
