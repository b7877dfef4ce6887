#pragma once

#include <cstdint>
#include <string>

#include "obtwist/catalog.hpp"
#include "obtwist/fdtc.hpp"

namespace obt {

inline constexpr const char* kEngineVersion = "obtwist-1.0";

struct CensusOptions {
  std::string surface = "S1_2";
  int max_syllables = 2;
  long long exponent_bound = 1;
  std::string out_path;    // empty: stream records to stdout, no resume
  long long budget = -1;   // max records to write this run; -1 = no limit
  int jobs = 1;            // worker threads; output order is fixed regardless
  FdtcOptions fdtc;        // engine options baked into every record
};

struct CensusSummary {
  long long written = 0;       // records written by this run
  long long existing = 0;      // records already present and verified on resume
  long long total = 0;         // records in the file afterwards
  bool completed = false;      // the enumeration is exhausted
  long long pa_certified = 0;  // records whose class the sign-split certifies
  long long not_lspace = 0;    // records carrying a not-L-space certificate
};

// Number of normalized words with at most `max_syllables` syllables over
// `num_gens` generators with exponents in [-bound, bound] \ {0}: adjacent
// syllables use distinct generators.
long long census_count(int max_syllables, int num_gens, long long bound);

// One self-contained record line for a word (no trailing newline). Records
// carry the word, every boundary coefficient, the capped coefficient when the
// book has two boundaries and a modeled cap, the automatic sign-split
// certification verdict, the inferred certificates, and the engine version.
std::string census_record(const Catalog& cat, const std::string& surface,
                          const TwistWord& w, const FdtcOptions& fopt);

// Enumerate words in length-lex order (syllable count, then generator order,
// then exponent rank +1, -1, +2, -2, ...), compute each record, append to the
// output. Resuming re-verifies every existing record byte-for-byte
// (OutputCorrupt on mismatch) before continuing.
CensusSummary run_census(const Catalog& cat, const CensusOptions& opt);

}  // namespace obt
