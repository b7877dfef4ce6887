#include "obtwist/census.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "obtwist/bounds.hpp"
#include "obtwist/errors.hpp"
#include "obtwist/openbook.hpp"
#include "obtwist/words.hpp"

namespace obt {

long long census_count(int max_syllables, int num_gens, long long bound) {
  if (max_syllables < 0 || num_gens <= 0 || bound < 1) return max_syllables >= 0 ? 1 : 0;
  long long exps = 2 * bound;
  long long total = 1;  // empty word
  long long level = 1;
  for (int s = 1; s <= max_syllables; ++s) {
    level *= (s == 1 ? num_gens : num_gens - 1) * exps;
    total += level;
  }
  return total;
}

namespace {

long long exponent_at(long long rank) {
  long long mag = rank / 2 + 1;
  return rank % 2 == 0 ? mag : -mag;
}

// Length-lex enumeration; adjacent syllables use distinct generators so every
// emitted word is already in canonical syllable form.
void enumerate_words(const SurfaceModel& m, int max_syllables, long long bound,
                     const std::function<void(const TwistWord&)>& emit) {
  const std::vector<std::string>& gens = m.generator_order;
  TwistWord w;
  w.surface = m.id;
  // Emit by exact syllable count so order is length-first.
  for (int s = 0; s <= max_syllables; ++s) {
    std::function<void(int)> fill = [&](int left) {
      if (left == 0) {
        emit(w);
        return;
      }
      for (const std::string& g : gens) {
        if (!w.syllables.empty() && w.syllables.back().gen == g) continue;
        for (long long rank = 0; rank < 2 * bound; ++rank) {
          w.syllables.push_back(Syllable{g, exponent_at(rank)});
          fill(left - 1);
          w.syllables.pop_back();
        }
      }
    };
    fill(s);
  }
}

std::string render_fdtc(const FdtcResult& r) {
  if (r.resolved) return r.value.str();
  return "[" + r.lo.str() + "," + r.hi.str() + "]";
}

bool is_boundary_parallel_gen(const SurfaceModel& m, const std::string& gen) {
  for (const auto& [label, names] : m.boundary_parallel)
    for (const auto& n : names)
      if (n == gen) return true;
  return false;
}

// Split the generators the reduced word actually twists along by exponent
// sign; a generator used with both signs lands in the plus family so the
// sign check fails honestly.
void auto_families(const SurfaceModel& m, const std::vector<Syllable>& reduced,
                   std::vector<std::string>* plus, std::vector<std::string>* minus) {
  std::map<std::string, int> sign;  // +1, -1, 2 = mixed
  for (const auto& s : reduced) {
    if (is_boundary_parallel_gen(m, s.gen)) continue;
    int sg = s.exp > 0 ? 1 : -1;
    auto it = sign.find(s.gen);
    if (it == sign.end())
      sign[s.gen] = sg;
    else if (it->second != sg)
      it->second = 2;
  }
  for (const auto& [g, sg] : sign) {
    if (sg == -1)
      minus->push_back(g);
    else
      plus->push_back(g);
  }
}

struct PennerOutcome {
  PennerReport report;
  std::vector<std::string> plus, minus;
};

PennerOutcome auto_penner(const Catalog& cat, const std::string& surface,
                          const TwistWord& w) {
  PennerOutcome o;
  PennerReport probe = penner_check(cat, surface, w, {}, {});
  auto_families(cat.get(surface), probe.reduced, &o.plus, &o.minus);
  o.report = penner_check(cat, surface, w, o.plus, o.minus);
  return o;
}

std::string render_penner(const PennerOutcome& o) {
  if (!o.report.certified) return "no(" + o.report.reason + ")";
  std::ostringstream os;
  os << "pA(S+=";
  for (size_t i = 0; i < o.plus.size(); ++i) os << (i ? "," : "") << o.plus[i];
  os << ";S-=";
  for (size_t i = 0; i < o.minus.size(); ++i) os << (i ? "," : "") << o.minus[i];
  os << ")";
  return os.str();
}

}  // namespace

std::string census_record(const Catalog& cat, const std::string& surface,
                          const TwistWord& w, const FdtcOptions& fopt) {
  const SurfaceModel& m = cat.get(surface);
  std::ostringstream os;
  os << "word=" << print_syllables(w.syllables);

  FdtcData data;
  for (const auto& label : m.boundary_labels) {
    FdtcResult r = fdtc(cat, surface, w, label, fopt);
    os << "|tau[" << label << "]=" << render_fdtc(r);
    data.boundary.push_back(TauInput::from(r));
  }

  Hypotheses h;
  PennerOutcome pen = auto_penner(cat, surface, w);
  if (pen.report.certified) h.phi_pa = true;

  bool capped_applicable = false;
  if (m.num_boundaries() == 2) {
    auto it = m.caps.find(m.boundary_labels[0]);
    if (it != m.caps.end() && it->second.kind == CapTargetKind::Surface) {
      capped_applicable = true;
      OpenBook capped = cap_off(cat, OpenBook{surface, w}, m.boundary_labels[0]);
      const SurfaceModel& cm = cat.get(capped.surface);
      FdtcResult r = fdtc(cat, capped.surface, capped.phi, cm.boundary_labels[0], fopt);
      os << "|capped=" << render_fdtc(r);
      data.capped = TauInput::from(r);
      PennerOutcome pen0 = auto_penner(cat, capped.surface, capped.phi);
      if (pen0.report.certified) h.phi0_pa = true;
    }
  }
  if (!capped_applicable) os << "|capped=n/a";

  os << "|penner=" << render_penner(pen);

  os << "|certs=";
  try {
    std::vector<Certificate> certs = infer_certificates(data, m.num_boundaries(), h);
    if (certs.empty()) {
      os << "none";
    } else {
      for (size_t i = 0; i < certs.size(); ++i) {
        if (i) os << ';';
        os << certs[i].rule << ":" << conclusion_name(certs[i].conclusion);
      }
    }
  } catch (const Error& e) {
    os << "error(" << error_code_name(e.code) << ")";
  }

  os << "|engine=" << kEngineVersion;
  return os.str();
}

CensusSummary run_census(const Catalog& cat, const CensusOptions& opt) {
  const SurfaceModel& m = cat.get(opt.surface);
  if (opt.max_syllables < 0 || opt.exponent_bound < 1)
    throw Error(ErrorCode::Internal, "census bounds must be positive");

  std::vector<TwistWord> words;
  {
    int last = -1;
    enumerate_words(m, opt.max_syllables, opt.exponent_bound,
                    [&](const TwistWord& w) {
                      int s = static_cast<int>(w.syllables.size());
                      if (s < last) throw Error(ErrorCode::Internal, "enumeration out of order");
                      last = s;
                      words.push_back(w);
                    });
  }
  long long expect = census_count(opt.max_syllables,
                                  static_cast<int>(m.generator_order.size()),
                                  opt.exponent_bound);
  if (static_cast<long long>(words.size()) != expect)
    throw Error(ErrorCode::Internal, "enumeration does not match the closed-form count");

  CensusSummary sum;
  std::vector<std::string> existing_lines;
  if (!opt.out_path.empty()) {
    std::ifstream in(opt.out_path);
    if (in) {
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) existing_lines.push_back(line);
    }
  }
  if (existing_lines.size() > words.size())
    throw Error(ErrorCode::OutputCorrupt,
                "existing census holds more records than the enumeration produces");

  auto t0 = std::chrono::steady_clock::now();

  // Replay-verify the completed prefix byte for byte.
  for (size_t i = 0; i < existing_lines.size(); ++i) {
    std::string fresh = census_record(cat, opt.surface, words[i], opt.fdtc);
    if (fresh != existing_lines[i])
      throw Error(ErrorCode::OutputCorrupt,
                  "census record " + std::to_string(i) + " does not replay-verify");
  }
  sum.existing = static_cast<long long>(existing_lines.size());

  long long to_do = static_cast<long long>(words.size()) - sum.existing;
  if (opt.budget >= 0 && to_do > opt.budget) to_do = opt.budget;

  std::vector<std::string> fresh(static_cast<size_t>(to_do));
  int jobs = opt.jobs > 1 ? opt.jobs : 1;
  if (jobs > 1 && to_do > 0) {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&, j]() {
        for (long long i = j; i < to_do; i += jobs)
          fresh[static_cast<size_t>(i)] = census_record(
              cat, opt.surface, words[static_cast<size_t>(sum.existing + i)], opt.fdtc);
      });
    for (auto& th : pool) th.join();
  } else {
    for (long long i = 0; i < to_do; ++i)
      fresh[static_cast<size_t>(i)] = census_record(
          cat, opt.surface, words[static_cast<size_t>(sum.existing + i)], opt.fdtc);
  }

  if (!opt.out_path.empty()) {
    std::ofstream outf(opt.out_path, std::ios::app);
    if (!outf) throw Error(ErrorCode::Internal, "cannot open census output " + opt.out_path);
    for (const auto& l : fresh) outf << l << "\n";
  } else {
    for (const auto& l : fresh) std::cout << l << "\n";
  }
  sum.written = to_do;
  sum.total = sum.existing + sum.written;
  sum.completed = sum.total == static_cast<long long>(words.size());

  for (const auto* vec : {&existing_lines, &fresh})
    for (const auto& l : *vec) {
      if (l.find("|penner=pA(") != std::string::npos) ++sum.pa_certified;
      if (l.find(":not_Lspace") != std::string::npos) ++sum.not_lspace;
    }

  auto t1 = std::chrono::steady_clock::now();
  std::cerr << "census: " << sum.written << " new, " << sum.existing
            << " verified, "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
            << " ms\n";
  return sum;
}

}  // namespace obt
