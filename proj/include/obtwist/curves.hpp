#pragma once

#include <string>
#include <vector>

#include "obtwist/rational.hpp"
#include "obtwist/surface.hpp"
#include "obtwist/words.hpp"

namespace obt {

// A curve or arc to draw on the polygon.  Words must be reduced (cyclically
// reduced for curves).  Items with identical words are drawn as parallel
// copies and never cross each other.
struct DrawnItem {
  bool is_arc = false;
  std::vector<Letter> letters;
  ArcEnd start{-1, -1};
  ArcEnd end{-1, -1};
};

DrawnItem as_item(const SurfaceModel& m, const CurveWord& c);
DrawnItem as_item(const SurfaceModel& m, const ArcWord& a);

// Minimal transverse crossings between the two items (for equal classes,
// crossings between two parallel copies).
long long pair_crossings(const SurfaceModel& m, const DrawnItem& a,
                         const DrawnItem& b);

// Crossings of the item with itself in its own minimal drawing (0 iff the
// class is embeddable).
long long self_crossings(const SurfaceModel& m, const DrawnItem& a);

// --- collar winding -------------------------------------------------------

// Signed count of how far the arc's initial letters follow the hugging
// itinerary of its start boundary, in full turns (a rational with
// denominator |cycle|).  Positive = the perimeter direction.
Rational collar_progress(const SurfaceModel& m, const ArcWord& arc);

// Collar intersection number at boundary B of `image` against `base`: the
// integer part (rounded toward zero) of the difference of their collar
// progress.  Both arcs must start at the same marked point of B.
long long collar_intersection(const SurfaceModel& m, const ArcWord& image,
                              const ArcWord& base, const std::string& B);

// True if the reduced arc can be slid into the boundary: its word is a pure
// hugging itinerary connecting its two endpoints along one boundary circle.
bool is_boundary_parallel(const SurfaceModel& m, const ArcWord& arc);

// --- drawing layout --------------------------------------------------------

// The minimal drawing of a family of items, exported as circle coordinates on
// the polygon perimeter: every chord runs between two coordinates, and cut
// coordinates carry the coordinate of the same surface point on the partner
// copy.  One extra (vertex-free) slot follows each side's points; corner
// vertices of the polygon can be placed there.
struct CurveLayout {
  int ncoords = 0;
  struct Chord {
    int from = 0;
    int to = 0;
    int item = 0;
  };
  std::vector<Chord> chords;
  std::vector<int> partner;       // per coordinate; -1 off the cuts
  std::vector<int> side_first;    // per polygon side: first coordinate
  std::vector<int> side_npoints;  // per polygon side: real points on it
};

CurveLayout layout_items(const SurfaceModel& m,
                         const std::vector<DrawnItem>& items);

// --- Dehn twists ----------------------------------------------------------

// Precomputed splice data for twisting along a named simple curve: for every
// ordered pair of polygon sides, the curve chords an extra strand running
// between those sides must cross, in order, with crossing signs.
struct TwistTable {
  std::string curve;
  std::vector<Letter> base;
  int sides = 0;
  // crossings[s1 * sides + s2] = list of (chord index, sign)
  std::vector<std::vector<std::pair<int, int>>> crossings;

  const std::vector<std::pair<int, int>>& at(int s1, int s2) const {
    return crossings[static_cast<size_t>(s1 * sides + s2)];
  }
};

TwistTable build_twist_table(const SurfaceModel& m, const std::string& curve);

// Image of the item's word under the n-th power of the twist (handedness h
// in {+1,-1} fixes which global side the splice pushes to), freely reduced.
// The item's endpoints are unchanged.  `keep` truncates the output to that
// many letters (0 = keep everything); truncated results are only trusted by
// callers that re-verify with a longer prefix.  `open_end` marks an arc whose
// letters are a prefix of a longer word, so nothing is spliced past its tail.
std::vector<Letter> apply_twist(const SurfaceModel& m, const TwistTable& t,
                                const DrawnItem& item, long long n, int h,
                                size_t keep = 0, bool open_end = false,
                                bool* truncated = nullptr);

}  // namespace obt
