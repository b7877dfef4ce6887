#include "obtwist/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "obtwist/errors.hpp"

namespace obt {

TauInput TauInput::from(const FdtcResult& r) {
  if (r.resolved) return at(r.value);
  return range(r.lo, r.hi);
}

std::string conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::CredCappedZero: return "c_red_capped_zero";
    case Conclusion::CappedTauLeOne: return "capped_tau_le_1";
    case Conclusion::NotLspace: return "not_Lspace";
    case Conclusion::HFredLowerBound: return "HFred_lower_bound";
    case Conclusion::SurgeryHFredBound: return "surgery_HFred_bound";
    case Conclusion::CoverNotLspace: return "cover_not_Lspace";
    case Conclusion::CoverHFredBound: return "cover_HFred_bound";
    case Conclusion::CredCappedNonzeroDerived: return "c_red_capped_nonzero_derived";
    case Conclusion::TauNonnegAll: return "tau_nonneg_all";
  }
  return "unknown";
}

namespace {

// Three-valued comparison results for interval inputs: Maybe means the
// bracket straddles the threshold, which the engine reports instead of
// guessing.
enum class Tri { No, Yes, Maybe };

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Yes && b == Tri::Yes) return Tri::Yes;
  return Tri::Maybe;
}
Tri tri_or(Tri a, Tri b) {
  if (a == Tri::Yes || b == Tri::Yes) return Tri::Yes;
  if (a == Tri::No && b == Tri::No) return Tri::No;
  return Tri::Maybe;
}

Tri lt(const TauInput& t, const Rational& c) {
  if (t.hi < c) return Tri::Yes;
  if (t.lo >= c) return Tri::No;
  return Tri::Maybe;
}
Tri le(const TauInput& t, const Rational& c) {
  if (t.hi <= c) return Tri::Yes;
  if (t.lo > c) return Tri::No;
  return Tri::Maybe;
}
Tri gt(const TauInput& t, const Rational& c) {
  if (t.lo > c) return Tri::Yes;
  if (t.hi <= c) return Tri::No;
  return Tri::Maybe;
}
Tri eq(const TauInput& t, const Rational& c) {
  if (t.lo == c && t.hi == c) return Tri::Yes;
  if (c < t.lo || c > t.hi) return Tri::No;
  return Tri::Maybe;
}

std::string tau_text(int i, const TauInput& t) {
  std::string name = "tau_B" + std::to_string(i + 1);
  if (t.exact()) return name + " = " + t.lo.str();
  return name + " in [" + t.lo.str() + "," + t.hi.str() + "]";
}
std::string capped_text(const TauInput& t) {
  if (t.exact()) return "capped_tau = " + t.lo.str();
  return "capped_tau in [" + t.lo.str() + "," + t.hi.str() + "]";
}

// Evaluator shared by derive_hypotheses and infer_certificates: decides
// whether the twist data forces the capped reduced class nonzero, and via
// which clause.
struct CredDerivation {
  Tri plain = Tri::No;  // capped coefficient above one
  Tri pa = Tri::No;     // capped coefficient exactly one, capped monodromy pA
  Tri any() const { return tri_or(plain, pa); }
};

CredDerivation derive_cred(const FdtcData& data, int r, const Hypotheses& h) {
  CredDerivation d;
  if (r != 2 || !data.capped) return d;
  d.plain = gt(*data.capped, Rational(1));
  if (h.phi0_pa.value_or(false)) d.pa = eq(*data.capped, Rational(1));
  return d;
}

}  // namespace

Hypotheses derive_hypotheses(const FdtcData& data, int r, Hypotheses h) {
  CredDerivation d = derive_cred(data, r, h);
  if (d.any() == Tri::Yes) {
    if (h.c_red_capped_nonzero && !*h.c_red_capped_nonzero)
      throw Error(ErrorCode::HypothesisConflict,
                  "the capped twist data forces the capped reduced class nonzero, "
                  "contradicting the supplied hypothesis");
    h.c_red_capped_nonzero = true;
  }
  return h;
}

namespace {

std::vector<Certificate> infer_impl(const FdtcData& d, int r, Hypotheses h) {
  std::vector<Certificate> out;
  std::vector<std::string> straddled;

  auto note = [&](Tri t, const std::string& rule) {
    if (t == Tri::Maybe) straddled.push_back(rule);
    return t == Tri::Yes;
  };

  // Hypothesis derivation doubles as the first pair of rules.
  CredDerivation cd = derive_cred(d, r, h);
  bool user_cred = h.c_red_capped_nonzero.has_value();
  Hypotheses hy = derive_hypotheses(d, r, h);
  if (note(cd.plain, "capped-class-nonzero") && !user_cred) {
    Certificate c;
    c.rule = "capped-class-nonzero";
    c.conclusion = Conclusion::CredCappedNonzeroDerived;
    c.hypotheses_used = {capped_text(*d.capped), "r = 2"};
    c.citation = "a connected capped binding twisted more than a full turn has "
                 "nonvanishing reduced class";
    c.statement = "c_red(capped book) != 0";
    out.push_back(c);
  } else if (note(cd.pa, "capped-class-nonzero-pa") && !user_cred) {
    Certificate c;
    c.rule = "capped-class-nonzero-pa";
    c.conclusion = Conclusion::CredCappedNonzeroDerived;
    c.hypotheses_used = {capped_text(*d.capped), "phi0_pA", "r = 2"};
    c.citation = "pseudo-Anosov capped monodromy with coefficient exactly one "
                 "has nonvanishing reduced class";
    c.statement = "c_red(capped book) != 0";
    out.push_back(c);
  }
  bool cred = hy.c_red_capped_nonzero.value_or(false);
  bool lsp = hy.y_is_lspace.value_or(false);
  bool qhs = hy.y0_is_qhs.value_or(false);
  bool cover_qhs = hy.sigma_n_y0_is_qhs.value_or(false);
  bool pa = hy.phi_pa.value_or(false);
  bool have_dim = hy.dim_hfred_y.has_value();
  Rational dim(have_dim ? *hy.dim_hfred_y : 0);

  size_t nb = d.boundary.size();
  auto t1 = [&]() -> const TauInput& { return d.boundary[0]; };
  // Clause helpers over the distinguished and the other boundary coefficients.
  auto t1_lt = [&](const Rational& c) { return nb >= 1 ? lt(t1(), c) : Tri::No; };
  auto t1_le = [&](const Rational& c) { return nb >= 1 ? le(t1(), c) : Tri::No; };
  auto other_lt0 = [&]() {
    Tri acc = Tri::No;
    for (size_t i = 1; i < nb; ++i) acc = tri_or(acc, lt(d.boundary[i], Rational(0)));
    return acc;
  };
  auto other_le0 = [&]() {
    Tri acc = Tri::No;
    for (size_t i = 1; i < nb; ++i) acc = tri_or(acc, le(d.boundary[i], Rational(0)));
    return acc;
  };
  auto t2_lt0 = [&]() { return nb >= 2 ? lt(d.boundary[1], Rational(0)) : Tri::No; };
  auto t2_le0 = [&]() { return nb >= 2 ? le(d.boundary[1], Rational(0)) : Tri::No; };

  auto used_taus = [&](bool with_second) {
    std::vector<std::string> v;
    if (nb >= 1) v.push_back(tau_text(0, d.boundary[0]));
    if (with_second)
      for (size_t i = 1; i < nb; ++i) v.push_back(tau_text(static_cast<int>(i), d.boundary[i]));
    return v;
  };

  // Vanishing of the capped reduced class from an ambient L-space.
  if (lsp) {
    Tri plain = tri_or(t1_lt(Rational(-1)), tri_and(t1_lt(Rational(0)), other_lt0()));
    if (note(plain, "lspace-vanishing")) {
      Certificate c;
      c.rule = "lspace-vanishing";
      c.conclusion = Conclusion::CredCappedZero;
      c.hypotheses_used = used_taus(true);
      c.hypotheses_used.insert(c.hypotheses_used.begin(), "Y_is_Lspace");
      c.citation = "an ambient L-space with sufficiently negative twisting forces "
                   "the capped reduced class to vanish";
      c.statement = "c_red(capped book) = 0";
      out.push_back(c);
    }
    if (pa) {
      Tri strict = tri_or(t1_le(Rational(-1)), tri_and(t1_le(Rational(0)), other_le0()));
      if (note(strict, "lspace-vanishing-strict")) {
        Certificate c;
        c.rule = "lspace-vanishing-strict";
        c.conclusion = Conclusion::CredCappedZero;
        c.hypotheses_used = used_taus(true);
        c.hypotheses_used.insert(c.hypotheses_used.begin(), "Y_is_Lspace");
        c.hypotheses_used.push_back("phi_pA");
        c.citation = "strict form: pseudo-Anosov monodromy sharpens the twisting "
                     "thresholds by one closed endpoint";
        c.statement = "c_red(capped book) = 0";
        out.push_back(c);
      }
    }
  }

  // Vanishing from a rational homology sphere filling with known reduced dim.
  if (qhs && have_dim) {
    Rational lo1 = -dim - Rational(1);
    Tri plain = tri_or(t1_lt(lo1), tri_and(t1_lt(-dim), other_lt0()));
    if (note(plain, "qhs-vanishing")) {
      Certificate c;
      c.rule = "qhs-vanishing";
      c.conclusion = Conclusion::CredCappedZero;
      c.hypotheses_used = used_taus(true);
      c.hypotheses_used.insert(c.hypotheses_used.begin(), "dim_HFred_Y = " + dim.str());
      c.hypotheses_used.insert(c.hypotheses_used.begin(), "Y0_is_QHS");
      c.citation = "twisting below the reduced dimension of the ambient manifold "
                   "forces the capped reduced class to vanish";
      c.statement = "c_red(capped book) = 0";
      out.push_back(c);
    }
    if (pa) {
      Tri strict = tri_or(t1_le(lo1), tri_and(t1_le(-dim), other_le0()));
      if (note(strict, "qhs-vanishing-strict")) {
        Certificate c;
        c.rule = "qhs-vanishing-strict";
        c.conclusion = Conclusion::CredCappedZero;
        c.hypotheses_used = used_taus(true);
        c.hypotheses_used.insert(c.hypotheses_used.begin(), "dim_HFred_Y = " + dim.str());
        c.hypotheses_used.insert(c.hypotheses_used.begin(), "Y0_is_QHS");
        c.hypotheses_used.push_back("phi_pA");
        c.citation = "strict form of the reduced-dimension vanishing criterion "
                     "for pseudo-Anosov monodromy";
        c.statement = "c_red(capped book) = 0";
        out.push_back(c);
      }
    }
  }

  // Two-boundary capped-coefficient bounds.
  if (r == 2 && lsp) {
    Tri plain = tri_or(t1_lt(Rational(-1)), tri_and(t1_lt(Rational(0)), t2_lt0()));
    if (note(plain, "lspace-capped-bound")) {
      Certificate c;
      c.rule = "lspace-capped-bound";
      c.conclusion = Conclusion::CappedTauLeOne;
      c.hypotheses_used = used_taus(true);
      c.hypotheses_used.insert(c.hypotheses_used.begin(), "Y_is_Lspace");
      c.citation = "an ambient L-space with negative twisting caps the capped "
                   "coefficient at one";
      c.statement = "capped_tau <= 1";
      out.push_back(c);
    }
    if (pa) {
      Tri strict = tri_or(t1_le(Rational(-1)), tri_and(t1_le(Rational(0)), t2_le0()));
      if (note(strict, "lspace-capped-bound-strict")) {
        Certificate c;
        c.rule = "lspace-capped-bound-strict";
        c.conclusion = Conclusion::CappedTauLeOne;
        c.hypotheses_used = used_taus(true);
        c.hypotheses_used.insert(c.hypotheses_used.begin(), "Y_is_Lspace");
        c.hypotheses_used.push_back("phi_pA");
        c.citation = "strict form of the capped-coefficient bound for "
                     "pseudo-Anosov monodromy";
        c.statement = "capped_tau <= 1";
        out.push_back(c);
      }
    }
  }
  if (r == 2 && qhs && have_dim) {
    Rational lo1 = -dim - Rational(1);
    Tri plain = tri_or(t1_lt(lo1), tri_and(t1_lt(-dim), t2_lt0()));
    if (note(plain, "qhs-capped-bound")) {
      Certificate c;
      c.rule = "qhs-capped-bound";
      c.conclusion = Conclusion::CappedTauLeOne;
      c.hypotheses_used = used_taus(true);
      c.hypotheses_used.insert(c.hypotheses_used.begin(), "dim_HFred_Y = " + dim.str());
      c.hypotheses_used.insert(c.hypotheses_used.begin(), "Y0_is_QHS");
      c.citation = "twisting below the reduced dimension caps the capped "
                   "coefficient at one";
      c.statement = "capped_tau <= 1";
      out.push_back(c);
    }
    if (pa) {
      Tri strict = tri_or(t1_le(lo1), tri_and(t1_le(-dim), t2_le0()));
      if (note(strict, "qhs-capped-bound-strict")) {
        Certificate c;
        c.rule = "qhs-capped-bound-strict";
        c.conclusion = Conclusion::CappedTauLeOne;
        c.hypotheses_used = used_taus(true);
        c.hypotheses_used.insert(c.hypotheses_used.begin(), "dim_HFred_Y = " + dim.str());
        c.hypotheses_used.insert(c.hypotheses_used.begin(), "Y0_is_QHS");
        c.hypotheses_used.push_back("phi_pA");
        c.citation = "strict form of the reduced-dimension capped bound for "
                     "pseudo-Anosov monodromy";
        c.statement = "capped_tau <= 1";
        out.push_back(c);
      }
    }
  }

  // Contrapositives: obstruct the ambient manifold from being an L-space.
  if (r == 2) {
    Tri cases = tri_or(t1_lt(Rational(-1)), tri_and(t1_lt(Rational(0)), t2_lt0()));
    Tri plain = tri_and(cd.plain, cases);
    if (note(plain, "capped-obstruction-lspace")) {
      Certificate c;
      c.rule = "capped-obstruction-lspace";
      c.conclusion = Conclusion::NotLspace;
      c.hypotheses_used = used_taus(true);
      c.hypotheses_used.push_back(capped_text(*d.capped));
      c.citation = "contrapositive: a capped coefficient above one alongside "
                   "negative twisting rules out an ambient L-space";
      c.statement = "Y is not an L-space";
      out.push_back(c);
    }
    if (cred && pa) {
      Tri strict = tri_or(t1_le(Rational(-1)), tri_and(t1_le(Rational(0)), t2_le0()));
      if (note(strict, "capped-obstruction-lspace-strict")) {
        Certificate c;
        c.rule = "capped-obstruction-lspace-strict";
        c.conclusion = Conclusion::NotLspace;
        c.hypotheses_used = used_taus(true);
        c.hypotheses_used.push_back("c_red_capped_nonzero");
        c.hypotheses_used.push_back("phi_pA");
        c.citation = "contrapositive, strict form: a nonvanishing capped reduced "
                     "class with pseudo-Anosov monodromy and nonpositive "
                     "twisting rules out an ambient L-space";
        c.statement = "Y is not an L-space";
        out.push_back(c);
      }
    }
  }

  // Contrapositives: lower bounds on the reduced dimension of Y.
  std::vector<std::pair<Rational, bool>> floer_bounds;  // (bound, strict)
  if (r == 2 && qhs && nb >= 1) {
    if (note(cd.plain, "floer-lower-bound")) {
      Rational b = -t1().hi - Rational(1);
      Certificate c;
      c.rule = "floer-lower-bound";
      c.conclusion = Conclusion::HFredLowerBound;
      c.bound = b;
      c.strict = false;
      c.hypotheses_used = {"Y0_is_QHS", tau_text(0, t1()), capped_text(*d.capped)};
      c.citation = "contrapositive: a capped coefficient above one over a "
                   "rational homology sphere filling bounds the reduced "
                   "dimension of Y from below";
      c.statement = "dim HF+_red(Y) >= " + b.str();
      out.push_back(c);
      floer_bounds.push_back({b, false});
    }
    if (cred && pa) {
      Rational b = -t1().hi - Rational(1);
      Certificate c;
      c.rule = "floer-lower-bound-strict";
      c.conclusion = Conclusion::HFredLowerBound;
      c.bound = b;
      c.strict = true;
      c.hypotheses_used = {"Y0_is_QHS", tau_text(0, t1()), "c_red_capped_nonzero", "phi_pA"};
      c.citation = "contrapositive, strict form: pseudo-Anosov monodromy turns "
                   "the reduced-dimension bound strict";
      c.statement = "dim HF+_red(Y) > " + b.str();
      out.push_back(c);
      floer_bounds.push_back({b, true});
    }
  }
  for (const auto& [b, strict] : floer_bounds) {
    bool positive = strict ? b >= Rational(0) : b > Rational(0);
    if (!positive) continue;
    Certificate c;
    c.rule = "floer-bound-obstruction";
    c.conclusion = Conclusion::NotLspace;
    c.hypotheses_used = {std::string("dim HF+_red(Y) ") + (strict ? ">" : ">=") + " " + b.str()};
    c.citation = "positive reduced dimension is incompatible with an L-space";
    c.statement = "Y is not an L-space";
    out.push_back(c);
    break;  // one obstruction certificate suffices
  }

  // Surgery bounds on the distinguished binding.
  if (qhs && cred && nb >= 1) {
    for (long long n = 1; n <= 4; ++n) {
      Rational b = -t1().hi + Rational(n) - Rational(1);
      Certificate c;
      c.rule = "surgery-lower-bound";
      c.conclusion = Conclusion::SurgeryHFredBound;
      c.bound = b;
      c.n = n;
      c.hypotheses_used = {"Y0_is_QHS", "c_red_capped_nonzero", tau_text(0, t1())};
      c.citation = "a nonvanishing capped reduced class propagates a reduced-"
                   "dimension bound to every 1/n surgery on the distinguished binding";
      c.statement = "dim HF+_red(Y_{1/" + std::to_string(n) +
                    "}(B1)) >= -tau_B1 + n - 1 = " + b.str();
      out.push_back(c);
    }
  }

  // Branched-cover obstructions.
  if (r == 2 && nb >= 1 && d.capped) {
    Tri cond = tri_and(t1_lt(Rational(0)), gt(*d.capped, Rational(0)));
    if (note(cond, "cover-obstruction")) {
      // Smallest iterate making both scaled inequalities hold for every value
      // in the brackets.
      long long n_min = 0;
      for (long long n = 1; n <= 1000000; ++n) {
        Rational rn(n);
        if (rn * t1().hi < Rational(-1) && rn * d.capped->lo > Rational(1)) {
          n_min = n;
          break;
        }
      }
      if (n_min == 0)
        throw Error(ErrorCode::Internal, "cover iterate search exhausted");
      Certificate c;
      c.rule = "cover-obstruction";
      c.conclusion = Conclusion::CoverNotLspace;
      c.n_min = n_min;
      c.hypotheses_used = {tau_text(0, t1()), capped_text(*d.capped)};
      c.citation = "negative distinguished twisting with positive capped "
                   "twisting obstructs large cyclic branched covers from being "
                   "L-spaces";
      c.statement = "the n-fold cyclic branched cover over the binding is not an "
                    "L-space for n >= " + std::to_string(n_min);
      out.push_back(c);
      if (cover_qhs) {
        Rational b = -Rational(n_min) * t1().hi - Rational(1);
        Certificate c2;
        c2.rule = "cover-floer-bound";
        c2.conclusion = Conclusion::CoverHFredBound;
        c2.bound = b;
        c2.n = n_min;
        c2.hypotheses_used = {tau_text(0, t1()), capped_text(*d.capped), "Sigma_n_Y0_is_QHS"};
        c2.citation = "the same iteration bounds the reduced dimension of large "
                      "cyclic branched covers";
        c2.statement = "for n >= " + std::to_string(n_min) +
                       ": dim HF+_red(Sigma_n) >= -n*tau_B1 - 1 (= " + b.str() +
                       " at n = " + std::to_string(n_min) + ")";
        out.push_back(c2);
      }
    }
  }

  // Tightness bookkeeping: a nonvanishing capped class forces right-veering.
  if (cred) {
    Certificate c;
    c.rule = "capped-right-veering";
    c.conclusion = Conclusion::TauNonnegAll;
    c.hypotheses_used = {"c_red_capped_nonzero"};
    c.citation = "a nonvanishing contact class certifies tightness, and "
                 "tightness forces nonnegative twisting at every binding";
    c.statement = "every binding coefficient of the capped book is >= 0";
    out.push_back(c);
  }

  if (!straddled.empty()) {
    std::ostringstream os;
    os << "a twist bracket straddles the threshold of rule";
    os << (straddled.size() > 1 ? "s: " : " ");
    for (size_t i = 0; i < straddled.size(); ++i) {
      if (i) os << ", ";
      os << straddled[i];
    }
    throw Error(ErrorCode::InsufficientResolution, os.str());
  }

  // Consistency sweep: contradictory certificates mean contradictory inputs.
  bool any_zero = false, any_not_lspace = false, any_le_one = false;
  for (const auto& c : out) {
    if (c.conclusion == Conclusion::CredCappedZero) any_zero = true;
    if (c.conclusion == Conclusion::NotLspace) any_not_lspace = true;
    if (c.conclusion == Conclusion::CappedTauLeOne) any_le_one = true;
  }
  if (any_zero && cred)
    throw Error(ErrorCode::HypothesisConflict,
                "inputs force the capped reduced class both zero and nonzero");
  if (any_not_lspace && hy.y_is_lspace.value_or(false))
    throw Error(ErrorCode::HypothesisConflict,
                "inputs declare Y an L-space yet force it not to be one");
  if (any_le_one && d.capped && gt(*d.capped, Rational(1)) == Tri::Yes)
    throw Error(ErrorCode::HypothesisConflict,
                "inputs bound the capped coefficient by one yet supply a larger value");
  if (have_dim)
    for (const auto& c : out)
      if (c.conclusion == Conclusion::HFredLowerBound &&
          (c.strict ? dim <= c.bound : dim < c.bound))
        throw Error(ErrorCode::HypothesisConflict,
                    "supplied reduced dimension violates a derived lower bound");

  return out;
}

}  // namespace

std::vector<Certificate> infer_certificates(const FdtcData& data,
                                            const TauInput& capped, int r,
                                            Hypotheses h) {
  FdtcData d = data;
  d.capped = capped;
  return infer_impl(d, r, std::move(h));
}

std::vector<Certificate> infer_certificates(const FdtcData& data, int r,
                                            const Hypotheses& h) {
  return infer_impl(data, r, h);
}

std::string certificate_line(const Certificate& c) {
  std::ostringstream os;
  os << "cert rule=" << c.rule << " conclusion=" << conclusion_name(c.conclusion)
     << " bound=" << c.bound.str() << " strict=" << (c.strict ? 1 : 0)
     << " n=" << c.n << " n_min=" << c.n_min << " hyps=";
  for (size_t i = 0; i < c.hypotheses_used.size(); ++i) {
    if (i) os << ';';
    os << c.hypotheses_used[i];
  }
  os << " statement=" << c.statement << " citation=" << c.citation;
  return os.str();
}

}  // namespace obt
