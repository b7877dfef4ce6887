#pragma once

#include <map>
#include <string>
#include <vector>

#include "obtwist/catalog.hpp"
#include "obtwist/curves.hpp"
#include "obtwist/words.hpp"

namespace obt {

// Per-surface cache of twist splice tables.
class TwistCache {
 public:
  explicit TwistCache(const SurfaceModel& m) : m_(&m) {}
  const TwistTable& table(const std::string& curve);

 private:
  const SurfaceModel* m_;
  std::map<std::string, TwistTable> tabs_;
};

// Checks every syllable names a curve of the surface; UnknownGenerator
// otherwise.  SurfaceMismatch if the word is tagged for another surface.
void check_word(const SurfaceModel& m, const TwistWord& w);

// Image of an arc / curve under the mapping class (syllables applied
// rightmost first), fully reduced.
ArcWord apply_class(const SurfaceModel& m, int h, const TwistWord& w,
                    const ArcWord& arc, TwistCache* cache = nullptr);
CurveWord apply_class(const SurfaceModel& m, int h, const TwistWord& w,
                      const CurveWord& c, TwistCache* cache = nullptr);

// Prefix-limited arc image for long iterations: the letters are the first
// `keep` letters of the true image when complete is false, the whole image
// when complete is true.  Prefixes are heuristic (later cancellation can
// reach back); callers certify by re-running with a longer keep.
struct PrefixArc {
  std::vector<Letter> letters;
  bool complete = true;
};
PrefixArc apply_class_prefix(const SurfaceModel& m, int h, const TwistWord& w,
                             const PrefixArc& arc_letters, const ArcWord& arc,
                             size_t keep, TwistCache* cache = nullptr);

// Equality of mapping classes via their action on a filling family (all
// catalog curves plus the spanning arcs).
bool same_class_action(const SurfaceModel& m, int h, const TwistWord& a,
                       const TwistWord& b);

}  // namespace obt
