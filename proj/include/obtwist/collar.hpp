#pragma once

#include <string>
#include <vector>

namespace obt {

// Local model of the annular collar of the distinguished binding component.
// The picture: one vertical spanning arc (the reference side), the image arc
// winding `winding` times around the annulus, and three marked intersection
// points theta1 (curve/image), y1 (curve/reference) and x1 (reference/image,
// unique at the middle level). Extra winding strands create the z-corners.
struct CollarDiagram {
  int winding = 0;
  // One entry per image-strand crossing of the collar; +1 strands sit on the
  // positive side, -1 strands on the negative side. Negative-side strands
  // exist exactly when winding <= -1.
  std::vector<int> strand_signs;
  // Slot positions of the marked points in cyclic order around the collar.
  int theta1 = 0;
  int y1 = 1;
  int x1 = 2;
  // Slot positions of the candidate third corners carried by winding strands
  // (empty unless winding >= 1; negative-side strands admit no corner).
  std::vector<int> z;
  // Basepoint slot on the core curve, and the index of the region excluded by
  // the second basepoint (never covered by an admissible domain).
  int p = 0;
  int w_side = 0;
};

// |winding| <= bound, else WindingOutOfRange.
CollarDiagram build_collar(int winding, int bound = 16);

// One triangular domain in the collar: corners (theta1, y1, corner).
struct TriangleDomain {
  std::string corner;     // "x1" for the small corner triangle, else "z1", "z2", ...
  std::vector<long long> multiplicities;  // region coefficients, corner outward
  int n_p = 0;            // boundary-trace crossings of the basepoint p
  int n_w = 0;            // coverings of the excluded side
};

enum class DomainClass { Standard, Nonstandard, Rejected };

// standard  <=> corner is x1 and n_p == 0;
// rejected  <=> a negative coefficient, or n_w > 0 (excluded side covered),
//               or an x1-corner domain with leftover punctures.
DomainClass classify_domain(const TriangleDomain& d);

// All triangular domains with nonnegative coefficients and n_w = 0:
// the corner triangle always, plus one domain per positive winding level
// with n_p = 1..winding. Standard first, then ascending n_p.
std::vector<TriangleDomain> enumerate_triangles(const CollarDiagram& c);

// Text rendering used by the golden files and the CLI.
std::string collar_report(const CollarDiagram& c);

}  // namespace obt
