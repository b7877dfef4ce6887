#include "obtwist/collar.hpp"

#include <sstream>

#include "obtwist/errors.hpp"

namespace obt {

CollarDiagram build_collar(int winding, int bound) {
  if (bound < 0) throw Error(ErrorCode::Internal, "negative collar bound");
  if (winding > bound || winding < -bound)
    throw Error(ErrorCode::WindingOutOfRange,
                "collar winding " + std::to_string(winding) +
                    " exceeds the configured bound " + std::to_string(bound));
  CollarDiagram d;
  d.winding = winding;
  int strands = winding >= 0 ? winding : -winding;
  int sign = winding >= 0 ? +1 : -1;
  d.strand_signs.assign(static_cast<size_t>(strands), sign);
  d.theta1 = 0;
  d.y1 = 1;
  d.x1 = 2;
  d.z.clear();
  // Only positive-side strands carry a corner usable by a triangle; the
  // negative side winds the wrong way around.
  for (int j = 1; j <= winding; ++j) d.z.push_back(2 + j);
  d.p = 3;
  d.w_side = 2 * (winding > 0 ? winding : 0) + 1;
  return d;
}

DomainClass classify_domain(const TriangleDomain& d) {
  for (long long m : d.multiplicities)
    if (m < 0) return DomainClass::Rejected;
  if (d.n_w > 0) return DomainClass::Rejected;
  if (d.corner == "x1") return d.n_p == 0 ? DomainClass::Standard : DomainClass::Rejected;
  return d.n_p >= 1 ? DomainClass::Nonstandard : DomainClass::Rejected;
}

std::vector<TriangleDomain> enumerate_triangles(const CollarDiagram& c) {
  std::vector<TriangleDomain> out;
  TriangleDomain corner;
  corner.corner = "x1";
  corner.multiplicities = {1};
  corner.n_p = 0;
  corner.n_w = 0;
  out.push_back(corner);
  // Each positive winding level adds one wider triangle: the one with third
  // corner z_j sweeps past the basepoint j times and covers the 2j-1 strip
  // regions between the corner and that strand once each.
  for (int j = 1; j <= c.winding; ++j) {
    TriangleDomain t;
    t.corner = "z" + std::to_string(j);
    t.multiplicities.assign(static_cast<size_t>(2 * j - 1), 1);
    t.n_p = j;
    t.n_w = 0;
    out.push_back(t);
  }
  return out;
}

std::string collar_report(const CollarDiagram& c) {
  std::ostringstream os;
  os << "collar winding=" << c.winding << "\n";
  os << "strands=";
  if (c.strand_signs.empty()) {
    os << "none";
  } else {
    for (int s : c.strand_signs) os << (s > 0 ? '+' : '-');
  }
  os << "\n";
  os << "points theta1=" << c.theta1 << " y1=" << c.y1 << " x1=" << c.x1 << "\n";
  auto doms = enumerate_triangles(c);
  os << "domains=" << doms.size() << "\n";
  for (const auto& d : doms) {
    os << "domain corner=" << d.corner << " class=";
    switch (classify_domain(d)) {
      case DomainClass::Standard: os << "standard"; break;
      case DomainClass::Nonstandard: os << "nonstandard"; break;
      case DomainClass::Rejected: os << "rejected"; break;
    }
    os << " n_p=" << d.n_p << " n_w=" << d.n_w << " coeffs=";
    for (size_t i = 0; i < d.multiplicities.size(); ++i) {
      if (i) os << ',';
      os << d.multiplicities[i];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace obt
