#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "obtwist/words.hpp"

namespace obt {

// A catalog surface is one polygon with some sides glued in pairs (the cut
// system) and the rest forming the boundary.  Everything else — boundary
// circles, corner cycles, Euler characteristic — is derived from the side
// list.

enum class SideKind { Cut, Boundary };

struct Side {
  SideKind kind;
  int cut = -1;        // cut index, for Cut sides
  int dir = 0;         // +1 / -1 copy, for Cut sides
  int bcomp = -1;      // boundary component index, for Boundary sides
  int piece = -1;      // declaration index of this piece within its component
};

// A boundary circle, traced in the perimeter direction.  Walking past the
// corner after walk[i] crosses the cuts recorded in cycle between positions
// i and i+1 (exactly one letter per hop on every catalog surface).
struct BoundaryInfo {
  std::string label;
  std::vector<int> walk;            // boundary side indices, in circle order
  std::vector<Letter> cycle;        // cycle[i] = cut crossed after walk[i]
  std::vector<int> mark_sides;      // polygon side holding marked point i
  std::vector<int> mark_walk_pos;   // position of that side in `walk`

  // Hugging itineraries from marked point m: the letters an arc sliding
  // along just inside the boundary picks up, in the positive (perimeter)
  // or negative direction.
  std::vector<Letter> cycle_from_mark(int m) const;
  std::vector<Letter> neg_cycle_from_mark(int m) const;
};

enum class CapImageKind { Generator, Trivial, BoundaryParallel };

struct CapImage {
  CapImageKind kind;
  std::string target_gen;       // Generator: image generator name
  std::string target_boundary;  // BoundaryParallel: boundary label in target
};

struct CappingTable {
  std::string source;
  std::string capped_boundary;
  std::string target;
  std::map<std::string, CapImage> generator_images;
  std::map<std::string, std::string> boundary_map;  // remaining source boundary -> target boundary
};

// Rewrite rule: an alternating run of `gens` of length `run_length`, all
// exponents equal to e in {+1,-1}, equals target^e as a mapping class.
struct ChainRewrite {
  std::vector<std::string> gens;
  int run_length = 0;
  std::string target;
};

enum class CapTargetKind { Surface, Outside, Last };

struct CapSpec {
  CapTargetKind kind;
  CappingTable table;  // valid when kind == Surface
};

struct SurfaceModel {
  std::string id;
  int genus = 0;
  std::vector<std::string> boundary_labels;
  std::vector<std::string> cut_names;
  std::vector<Side> polygon;

  std::vector<std::string> generator_order;
  std::map<std::string, CurveWord> generators;
  std::map<std::string, CurveWord> aux_curves;  // named curves that are not generators
  std::map<std::string, ArcWord> test_arcs;     // boundary label -> arc
  // boundary label -> generator names whose curve is parallel to that boundary
  std::map<std::string, std::vector<std::string>> boundary_parallel;
  std::map<std::pair<std::string, std::string>, int> intersection_table;
  std::vector<ChainRewrite> rewrites;
  bool planar = false;
  std::map<std::string, CapSpec> caps;  // boundary label -> capping

  // derived
  std::vector<BoundaryInfo> boundaries;

  int num_cuts() const { return static_cast<int>(cut_names.size()); }
  int num_boundaries() const { return static_cast<int>(boundary_labels.size()); }
  int boundary_index(const std::string& label) const;
  const BoundaryInfo& boundary(const std::string& label) const;
  // polygon side index of the cut copy a letter exits through / re-enters at
  int exit_side(Letter l) const;
  int reentry_side(Letter l) const;
  int cut_side(int cut, int dir) const;

  bool has_curve(const std::string& name) const {
    return generators.count(name) || aux_curves.count(name);
  }
  const CurveWord& curve(const std::string& name) const;

  int intersection_entry(const std::string& x, const std::string& y) const;

  // Euler characteristic of the glued polygon: V - E + F with F = 1.
  int euler_characteristic() const;

  // Parse a letter word like "u v u- v-" over this surface's cut names.
  std::vector<Letter> parse_letters(const std::string& text) const;
  std::string print_letters(const std::vector<Letter>& letters) const;
};

// Parse one catalog data file (see docs/FORMAT.md).  Performs the structural
// derivations and cheap validity checks; throws CatalogCorrupt / ParseError.
SurfaceModel parse_surface_text(const std::string& text);

}  // namespace obt
