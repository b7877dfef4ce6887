#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obtwist/fdtc.hpp"
#include "obtwist/rational.hpp"

namespace obt {

// Externally supplied facts about the ambient manifold and its Floer
// homology. Nothing here is ever computed; absent means unknown.
struct Hypotheses {
  std::optional<bool> y_is_lspace;
  std::optional<bool> y0_is_qhs;          // capped-off filling is a QHS
  std::optional<bool> sigma_n_y0_is_qhs;  // branched-cover capped filling is a QHS
  std::optional<bool> c_red_capped_nonzero;  // reduced class of the capped book
  std::optional<long long> dim_hfred_y;      // nonnegative
  std::optional<bool> phi_pa;   // monodromy certified pseudo-Anosov
  std::optional<bool> phi0_pa;  // capped monodromy certified pseudo-Anosov
};

// Exact value or interval bracket for one twist coefficient. Rules fire only
// when the whole interval satisfies the inequality; a bracket that straddles
// a rule threshold is an InsufficientResolution error, never a guess.
struct TauInput {
  Rational lo{0, 1};
  Rational hi{0, 1};
  bool exact() const { return lo == hi; }
  static TauInput at(const Rational& v) { return TauInput{v, v}; }
  static TauInput range(const Rational& a, const Rational& b) { return TauInput{a, b}; }
  static TauInput from(const FdtcResult& r);
};

// Per-boundary twist data for one open book; index 0 is the distinguished
// boundary (the one capping removes). `capped` is the coefficient of the
// capped book at its remaining binding, when the book has two boundaries.
struct FdtcData {
  std::vector<TauInput> boundary;
  std::optional<TauInput> capped;
};

enum class Conclusion {
  CredCappedZero,           // reduced class of the capped book vanishes
  CappedTauLeOne,           // capped twist coefficient is at most 1
  NotLspace,                // the ambient manifold is not an L-space
  HFredLowerBound,          // dim of reduced homology of Y bounded below
  SurgeryHFredBound,        // same for the 1/n surgery on the distinguished binding
  CoverNotLspace,           // some cyclic branched cover is not an L-space
  CoverHFredBound,          // reduced-homology bound for large covers
  CredCappedNonzeroDerived, // nonvanishing of the capped reduced class
  TauNonnegAll,             // every binding coefficient of the capped book is >= 0
};

std::string conclusion_name(Conclusion c);

struct Certificate {
  std::string rule;  // stable rule id
  Conclusion conclusion;
  Rational bound{0, 1};  // bound value for the *Bound conclusions
  bool strict = false;   // bound is ">" rather than ">="
  long long n = 0;       // surgery / cover parameter (threshold for cover bounds)
  long long n_min = 0;   // minimal cover order for CoverNotLspace
  std::vector<std::string> hypotheses_used;
  std::string citation;   // implication the rule instantiates, in words
  std::string statement;  // rendered conclusion
};

// Augment the hypotheses with facts forced by the twist data: with two
// boundaries, capped tau > 1 forces the capped reduced class nonzero; so does
// capped tau = 1 when the capped monodromy is pseudo-Anosov. Never overwrites
// a user-supplied value with a conflicting one (HypothesisConflict).
Hypotheses derive_hypotheses(const FdtcData& data, int r, Hypotheses h);

// Run every implication rule (plain and strict pseudo-Anosov variants,
// forward and contrapositive) and return the certificates whose hypotheses
// are fully satisfied. Errors: HypothesisConflict on contradictory inputs,
// InsufficientResolution when a bracket straddles a rule threshold.
std::vector<Certificate> infer_certificates(const FdtcData& data,
                                            const TauInput& capped, int r,
                                            Hypotheses h);

// Convenience overload taking the capped coefficient from `data`.
std::vector<Certificate> infer_certificates(const FdtcData& data, int r,
                                            const Hypotheses& h);

// Render a certificate as one line of structured text (stable field order).
std::string certificate_line(const Certificate& c);

}  // namespace obt
