#include "obtwist/mapping.hpp"

#include "obtwist/errors.hpp"

namespace obt {

const TwistTable& TwistCache::table(const std::string& curve) {
  auto it = tabs_.find(curve);
  if (it != tabs_.end()) return it->second;
  return tabs_.emplace(curve, build_twist_table(*m_, curve)).first->second;
}

void check_word(const SurfaceModel& m, const TwistWord& w) {
  if (!w.surface.empty() && w.surface != m.id)
    throw Error(ErrorCode::SurfaceMismatch,
                "word is for surface " + w.surface + ", not " + m.id);
  for (const Syllable& s : w.syllables)
    if (!m.has_curve(s.gen))
      throw Error(ErrorCode::UnknownGenerator,
                  "unknown generator " + s.gen + " on surface " + m.id);
}

ArcWord apply_class(const SurfaceModel& m, int h, const TwistWord& w,
                    const ArcWord& arc, TwistCache* cache) {
  check_word(m, w);
  TwistCache local(m);
  TwistCache& tc = cache ? *cache : local;
  DrawnItem it = as_item(m, arc);
  for (auto s = w.syllables.rbegin(); s != w.syllables.rend(); ++s)
    it.letters = apply_twist(m, tc.table(s->gen), it, s->exp, h);
  ArcWord out = arc;
  out.letters = std::move(it.letters);
  return out;
}

CurveWord apply_class(const SurfaceModel& m, int h, const TwistWord& w,
                      const CurveWord& c, TwistCache* cache) {
  check_word(m, w);
  TwistCache local(m);
  TwistCache& tc = cache ? *cache : local;
  DrawnItem it = as_item(m, c);
  for (auto s = w.syllables.rbegin(); s != w.syllables.rend(); ++s)
    it.letters = cyclic_reduce(apply_twist(m, tc.table(s->gen), it, s->exp, h));
  CurveWord out = c;
  out.letters = std::move(it.letters);
  return out;
}

PrefixArc apply_class_prefix(const SurfaceModel& m, int h, const TwistWord& w,
                             const PrefixArc& cur, const ArcWord& arc,
                             size_t keep, TwistCache* cache) {
  check_word(m, w);
  TwistCache local(m);
  TwistCache& tc = cache ? *cache : local;
  DrawnItem it = as_item(m, arc);
  it.letters = cur.letters;
  bool complete = cur.complete;
  for (auto s = w.syllables.rbegin(); s != w.syllables.rend(); ++s) {
    bool truncated = false;
    it.letters = apply_twist(m, tc.table(s->gen), it, s->exp, h, keep,
                             /*open_end=*/!complete, &truncated);
    complete = complete && !truncated;
  }
  return PrefixArc{std::move(it.letters), complete};
}

bool same_class_action(const SurfaceModel& m, int h, const TwistWord& a,
                       const TwistWord& b) {
  for (const auto& [name, cw] : m.generators) {
    (void)name;
    CurveWord ia = apply_class(m, h, a, cw);
    CurveWord ib = apply_class(m, h, b, cw);
    if (canonical_cyclic(ia.letters) != canonical_cyclic(ib.letters))
      return false;
  }
  for (const auto& [name, cw] : m.aux_curves) {
    (void)name;
    CurveWord ia = apply_class(m, h, a, cw);
    CurveWord ib = apply_class(m, h, b, cw);
    if (canonical_cyclic(ia.letters) != canonical_cyclic(ib.letters))
      return false;
  }
  for (const auto& [label, arc] : m.test_arcs) {
    (void)label;
    ArcWord ia = apply_class(m, h, a, arc);
    ArcWord ib = apply_class(m, h, b, arc);
    if (free_reduce(ia.letters) != free_reduce(ib.letters)) return false;
  }
  return true;
}

}  // namespace obt
