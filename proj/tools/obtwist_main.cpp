#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "obtwist/bounds.hpp"
#include "obtwist/catalog.hpp"
#include "obtwist/census.hpp"
#include "obtwist/collar.hpp"
#include "obtwist/errors.hpp"
#include "obtwist/fdtc.hpp"
#include "obtwist/openbook.hpp"
#include "obtwist/words.hpp"

using nlohmann::json;

namespace {

obt::Rational parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return obt::Rational(std::stoll(text));
    return obt::Rational(std::stoll(text.substr(0, slash)),
                         std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw obt::Error(obt::ErrorCode::ParseError, "bad rational: " + text);
  }
}

// "p/q" exact or "lo:hi" bracket.
obt::TauInput parse_tau(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) return obt::TauInput::at(parse_rational(text));
  return obt::TauInput::range(parse_rational(text.substr(0, colon)),
                              parse_rational(text.substr(colon + 1)));
}

json rational_json(const obt::Rational& r) {
  return json{{"num", r.num}, {"den", r.den}};
}

json fdtc_json(const obt::FdtcResult& r) {
  json j;
  j["resolved"] = r.resolved;
  if (r.resolved) j["tau"] = rational_json(r.value);
  j["lo"] = rational_json(r.lo);
  j["hi"] = rational_json(r.hi);
  j["k_used"] = r.k_used;
  return j;
}

std::optional<bool> tristate(const std::string& s, const std::string& flag) {
  if (s.empty()) return std::nullopt;
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw obt::Error(obt::ErrorCode::ParseError, "bad value for " + flag + ": " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact twist-coefficient engine for small open books"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  std::string surface = "S1_2", word_text, boundary, out_path;
  long long cover_n = 2, budget = -1, k_max = 0, denom_bound = 0, dim_in = -1;
  int winding = 0, winding_bound = 16, max_syllables = 2, jobs = 1;
  long long exponent_bound = 1;
  std::vector<std::string> plus, minus, taus;
  std::string capped_in, y_lspace_in, y0_qhs_in, cover_qhs_in, cred_in, phi_pa_in, phi0_pa_in;
  int r_in = 2;

  auto add_word_opts = [&](CLI::App* c, bool need_boundary) {
    c->add_option("--surface", surface, "catalog surface id")->required();
    c->add_option("--word", word_text, "monodromy word, e.g. \"a*b^-1\"")->required();
    if (need_boundary)
      c->add_option("--boundary", boundary, "boundary label")->required();
  };

  CLI::App* c_fdtc = app.add_subcommand("fdtc", "twist coefficient at a boundary");
  add_word_opts(c_fdtc, true);
  c_fdtc->add_option("--k-max", k_max, "iterate cap for the bracket search");
  c_fdtc->add_option("--denom-bound", denom_bound, "denominator bound for pinning");

  CLI::App* c_cap = app.add_subcommand("cap", "cap a boundary with a disk");
  add_word_opts(c_cap, true);

  CLI::App* c_cover = app.add_subcommand("cover", "cyclic cover branched over the binding");
  add_word_opts(c_cover, false);
  c_cover->add_option("--n", cover_n, "cover order")->required();

  CLI::App* c_penner = app.add_subcommand("penner", "sign-split pseudo-Anosov certification");
  add_word_opts(c_penner, false);
  c_penner->add_option("--plus", plus, "positive-twist family")->delimiter(',');
  c_penner->add_option("--minus", minus, "negative-twist family")->delimiter(',');

  CLI::App* c_collar = app.add_subcommand("collar", "collar triangle domains");
  c_collar->add_option("--winding", winding, "collar winding")->required();
  c_collar->add_option("--bound", winding_bound, "max |winding|");

  CLI::App* c_infer = app.add_subcommand("infer", "obstruction certificates from twist data");
  c_infer->add_option("--r", r_in, "number of binding components")->required();
  c_infer->add_option("--tau", taus, "per-boundary tau, exact p/q or bracket lo:hi")
      ->delimiter(',');
  c_infer->add_option("--capped", capped_in, "capped-book tau (p/q or lo:hi)");
  c_infer->add_option("--y-lspace", y_lspace_in, "Y is an L-space (true/false)");
  c_infer->add_option("--y0-qhs", y0_qhs_in, "capped filling is a QHS (true/false)");
  c_infer->add_option("--cover-qhs", cover_qhs_in, "cover filling is a QHS (true/false)");
  c_infer->add_option("--cred", cred_in, "capped reduced class nonzero (true/false)");
  c_infer->add_option("--dim", dim_in, "dim of the reduced homology of Y");
  c_infer->add_option("--phi-pa", phi_pa_in, "monodromy pseudo-Anosov (true/false)");
  c_infer->add_option("--phi0-pa", phi0_pa_in, "capped monodromy pseudo-Anosov (true/false)");

  CLI::App* c_census = app.add_subcommand("census", "enumerate words and persist records");
  c_census->add_option("--surface", surface, "catalog surface id");
  c_census->add_option("--max-syllables", max_syllables, "max syllable count");
  c_census->add_option("--exponent-bound", exponent_bound, "max |exponent|");
  c_census->add_option("--out", out_path, "output file (default stdout)");
  c_census->add_option("--budget", budget, "max records this run");
  c_census->add_option("--jobs", jobs, "worker threads");

  CLI::App* c_verify = app.add_subcommand("verify-catalog", "revalidate the built-in catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const obt::Catalog& cat = obt::catalog();
    obt::FdtcOptions fopt = obt::FdtcOptions::from_env();
    if (k_max > 0) fopt.k_max = k_max;
    if (denom_bound > 0) fopt.denom_bound = denom_bound;

    if (c_fdtc->parsed()) {
      obt::TwistWord w{surface, obt::parse_word_text(word_text)};
      obt::FdtcResult r = obt::fdtc(cat, surface, w, boundary, fopt);
      if (as_json) {
        json j = fdtc_json(r);
        j["surface"] = surface;
        j["word"] = obt::print_syllables(w.syllables);
        j["boundary"] = boundary;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "surface=" << surface << "\n"
                  << "word=" << obt::print_syllables(w.syllables) << "\n"
                  << "boundary=" << boundary << "\n"
                  << "resolved=" << (r.resolved ? "true" : "false") << "\n";
        if (r.resolved)
          std::cout << "tau=" << r.value.str() << "\n";
        else
          std::cout << "bracket=[" << r.lo.str() << "," << r.hi.str() << "]\n";
        std::cout << "k_used=" << r.k_used << "\n";
      }
      if (!r.resolved) {
        std::cerr << "unresolved at k_max=" << fopt.k_max
                  << " denom_bound=" << fopt.denom_bound << "\n";
        return 1;
      }
      return 0;
    }

    if (c_cap->parsed()) {
      obt::TwistWord w{surface, obt::parse_word_text(word_text)};
      obt::OpenBook ob = obt::make_open_book(cat, surface, w);
      obt::OpenBook capped = obt::cap_off(cat, ob, boundary);
      if (as_json) {
        std::cout << json{{"surface", capped.surface},
                          {"word", obt::print_syllables(capped.phi.syllables)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "surface=" << capped.surface << "\n"
                  << "word=" << obt::print_syllables(capped.phi.syllables) << "\n";
      }
      return 0;
    }

    if (c_cover->parsed()) {
      obt::TwistWord w{surface, obt::parse_word_text(word_text)};
      obt::OpenBook ob = obt::make_open_book(cat, surface, w);
      obt::OpenBook cov = obt::branched_cover(cat, ob, cover_n);
      if (as_json) {
        std::cout << json{{"surface", cov.surface},
                          {"word", obt::print_syllables(cov.phi.syllables)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "surface=" << cov.surface << "\n"
                  << "word=" << obt::print_syllables(cov.phi.syllables) << "\n";
      }
      return 0;
    }

    if (c_penner->parsed()) {
      obt::TwistWord w{surface, obt::parse_word_text(word_text)};
      obt::PennerReport rep = obt::penner_check(cat, surface, w, plus, minus);
      if (as_json) {
        json j{{"signs_ok", rep.signs_ok},
               {"disjoint_ok", rep.disjoint_ok},
               {"filling_ok", rep.filling_ok},
               {"usage_ok", rep.both_nonempty_used},
               {"verdict", rep.certified ? "pA_certified" : "not_applicable"},
               {"reduced", obt::print_syllables(rep.reduced)}};
        if (!rep.certified) j["reason"] = rep.reason;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "signs_ok=" << (rep.signs_ok ? "true" : "false") << "\n"
                  << "disjoint_ok=" << (rep.disjoint_ok ? "true" : "false") << "\n"
                  << "filling_ok=" << (rep.filling_ok ? "true" : "false") << "\n"
                  << "usage_ok=" << (rep.both_nonempty_used ? "true" : "false") << "\n"
                  << "verdict=" << (rep.certified ? "pA_certified" : "not_applicable") << "\n";
        if (!rep.certified) std::cout << "reason=" << rep.reason << "\n";
        std::cout << "reduced=" << obt::print_syllables(rep.reduced) << "\n";
      }
      return 0;
    }

    if (c_collar->parsed()) {
      obt::CollarDiagram d = obt::build_collar(winding, winding_bound);
      if (as_json) {
        json doms = json::array();
        for (const auto& t : obt::enumerate_triangles(d)) {
          json jt{{"corner", t.corner}, {"n_p", t.n_p}, {"n_w", t.n_w}};
          jt["multiplicities"] = t.multiplicities;
          switch (obt::classify_domain(t)) {
            case obt::DomainClass::Standard: jt["class"] = "standard"; break;
            case obt::DomainClass::Nonstandard: jt["class"] = "nonstandard"; break;
            case obt::DomainClass::Rejected: jt["class"] = "rejected"; break;
          }
          doms.push_back(jt);
        }
        std::cout << json{{"winding", d.winding}, {"domains", doms}}.dump() << "\n";
      } else {
        std::cout << obt::collar_report(d);
      }
      return 0;
    }

    if (c_infer->parsed()) {
      obt::FdtcData data;
      for (const auto& t : taus) data.boundary.push_back(parse_tau(t));
      if (!capped_in.empty()) data.capped = parse_tau(capped_in);
      obt::Hypotheses h;
      h.y_is_lspace = tristate(y_lspace_in, "--y-lspace");
      h.y0_is_qhs = tristate(y0_qhs_in, "--y0-qhs");
      h.sigma_n_y0_is_qhs = tristate(cover_qhs_in, "--cover-qhs");
      h.c_red_capped_nonzero = tristate(cred_in, "--cred");
      if (dim_in >= 0) h.dim_hfred_y = dim_in;
      h.phi_pa = tristate(phi_pa_in, "--phi-pa");
      h.phi0_pa = tristate(phi0_pa_in, "--phi0-pa");
      std::vector<obt::Certificate> certs = obt::infer_certificates(data, r_in, h);
      if (as_json) {
        json arr = json::array();
        for (const auto& c : certs) {
          json jc{{"rule", c.rule},
                  {"conclusion", obt::conclusion_name(c.conclusion)},
                  {"bound", rational_json(c.bound)},
                  {"strict", c.strict},
                  {"n", c.n},
                  {"n_min", c.n_min},
                  {"hypotheses", c.hypotheses_used},
                  {"statement", c.statement},
                  {"citation", c.citation}};
          arr.push_back(jc);
        }
        std::cout << json{{"certificates", arr}}.dump() << "\n";
      } else {
        std::cout << "certificates=" << certs.size() << "\n";
        for (const auto& c : certs) std::cout << obt::certificate_line(c) << "\n";
      }
      return 0;
    }

    if (c_census->parsed()) {
      obt::CensusOptions copt;
      copt.surface = surface;
      copt.max_syllables = max_syllables;
      copt.exponent_bound = exponent_bound;
      copt.out_path = out_path;
      copt.budget = budget;
      copt.jobs = jobs;
      copt.fdtc = fopt;
      obt::CensusSummary s = obt::run_census(cat, copt);
      if (as_json) {
        std::cout << json{{"written", s.written},
                          {"existing", s.existing},
                          {"total", s.total},
                          {"completed", s.completed},
                          {"pa_certified", s.pa_certified},
                          {"not_lspace", s.not_lspace}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "written=" << s.written << "\n"
                  << "existing=" << s.existing << "\n"
                  << "total=" << s.total << "\n"
                  << "completed=" << (s.completed ? "true" : "false") << "\n"
                  << "pa_certified=" << s.pa_certified << "\n"
                  << "not_lspace=" << s.not_lspace << "\n";
      }
      return 0;
    }

    if (c_verify->parsed()) {
      obt::Catalog copy = obt::catalog();
      obt::validate_catalog(copy);
      if (as_json) {
        std::cout << json{{"catalog", "ok"}, {"surfaces", copy.surfaces.size()}}.dump()
                  << "\n";
      } else {
        std::cout << "catalog=ok\n"
                  << "surfaces=" << copy.surfaces.size() << "\n";
      }
      return 0;
    }
  } catch (const obt::Error& e) {
    std::cerr << obt::error_code_name(e.code) << ": " << e.what() << "\n";
    return 1;
  }
  return 2;
}
