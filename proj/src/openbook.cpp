#include "obtwist/openbook.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "obtwist/curves.hpp"
#include "obtwist/errors.hpp"
#include "obtwist/fdtc.hpp"
#include "obtwist/mapping.hpp"

namespace obt {

OpenBook make_open_book(const Catalog& cat, const std::string& surface,
                        const TwistWord& phi) {
  const SurfaceModel& m = cat.get(surface);
  OpenBook ob;
  ob.surface = m.id;
  ob.phi.surface = m.id;
  ob.phi.syllables = normalize_syllables(phi.syllables);
  check_word(m, ob.phi);
  return ob;
}

OpenBook cap_off(const Catalog& cat, const OpenBook& ob,
                 const std::string& boundary) {
  const SurfaceModel& m = cat.get(ob.surface);
  check_word(m, ob.phi);
  (void)m.boundary_index(boundary);
  auto ci = m.caps.find(boundary);
  if (ci == m.caps.end())
    throw Error(ErrorCode::CatalogCorrupt,
                "no capping entry for boundary " + boundary);
  const CapSpec& spec = ci->second;
  if (spec.kind == CapTargetKind::Last)
    throw Error(ErrorCode::CannotCapLast,
                "capping " + boundary + " of " + m.id + " closes the page");
  if (spec.kind == CapTargetKind::Outside)
    throw Error(ErrorCode::NotInCatalog,
                "capping " + boundary + " of " + m.id +
                    " leaves the supported library");
  const CappingTable& t = spec.table;
  const SurfaceModel& tgt = cat.get(t.target);

  std::vector<Syllable> out;
  for (const Syllable& s : normalize_syllables(ob.phi.syllables)) {
    auto gi = t.generator_images.find(s.gen);
    if (gi == t.generator_images.end())
      throw Error(ErrorCode::CatalogCorrupt,
                  "capping table of " + m.id + " misses " + s.gen);
    const CapImage& im = gi->second;
    switch (im.kind) {
      case CapImageKind::Trivial:
        break;
      case CapImageKind::Generator:
        out.push_back(Syllable{im.target_gen, s.exp});
        break;
      case CapImageKind::BoundaryParallel: {
        auto bp = tgt.boundary_parallel.find(im.target_boundary);
        if (bp == tgt.boundary_parallel.end() || bp->second.empty())
          throw Error(ErrorCode::CatalogCorrupt,
                      "no curve parallel to " + im.target_boundary + " on " +
                          t.target);
        out.push_back(Syllable{bp->second.front(), s.exp});
        break;
      }
    }
  }
  OpenBook r;
  r.surface = t.target;
  r.phi.surface = t.target;
  r.phi.syllables = normalize_syllables(std::move(out));
  return r;
}

OpenBook branched_cover(const Catalog& cat, const OpenBook& ob, long long n) {
  const SurfaceModel& m = cat.get(ob.surface);
  check_word(m, ob.phi);
  if (n < 1)
    throw Error(ErrorCode::Internal, "cover degree must be at least 1");
  std::vector<Syllable> s = normalize_syllables(ob.phi.syllables);
  OpenBook r;
  r.surface = ob.surface;
  r.phi.surface = ob.surface;
  r.phi.syllables.reserve(s.size() * static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i)
    r.phi.syllables.insert(r.phi.syllables.end(), s.begin(), s.end());
  r.phi.syllables = normalize_syllables(std::move(r.phi.syllables));
  return r;
}

namespace {

// --- complement region trace ------------------------------------------------
//
// The drawing layout places every strand crossing on the polygon circle;
// chords are straight, so the arrangement inside the disk has convex faces.
// Faces are traced, then glued across the cut sides; every glued component of
// the complement is classified by its Euler characteristic and frontier
// circuits.  A parallel Euler-characteristic account over the whole surface
// cross-checks the trace.

struct Vec2 {
  double x = 0, y = 0;
};

double cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

struct DSU {
  std::vector<int> p;
  explicit DSU(size_t n) : p(n) {
    for (size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  }
  int find(int x) { return p[static_cast<size_t>(x)] == x ? x : p[static_cast<size_t>(x)] = find(p[static_cast<size_t>(x)]); }
  void unite(int a, int b) { p[static_cast<size_t>(find(a))] = find(b); }
};

struct RegionCensus {
  bool filling = false;
  long long chi_sum = 0;       // over all complement regions
  long long crossings = 0;     // arrangement crossings
};

RegionCensus complement_census(const SurfaceModel& m,
                               const std::vector<DrawnItem>& items) {
  const double kEps = 1e-9;
  CurveLayout lay = layout_items(m, items);
  const int N = lay.ncoords;
  const int nsides = static_cast<int>(m.polygon.size());

  // circle vertices: chord endpoints plus one corner before each side
  std::vector<int> corner_coord(static_cast<size_t>(nsides));
  for (int s = 0; s < nsides; ++s)
    corner_coord[static_cast<size_t>(s)] =
        lay.side_first[static_cast<size_t>(s)] +
        lay.side_npoints[static_cast<size_t>(s)];
  std::set<int> circ_set(corner_coord.begin(), corner_coord.end());
  for (const auto& c : lay.chords) {
    if (!circ_set.insert(c.from).second || !circ_set.insert(c.to).second)
      throw Error(ErrorCode::Internal, "chord endpoints must be distinct");
  }
  std::vector<int> circ(circ_set.begin(), circ_set.end());  // ascending
  std::map<int, int> vid_of_coord;
  std::vector<Vec2> vpos;
  auto theta = [&](int coord) {
    double frac = std::fmod(static_cast<double>(coord) * 0.6180339887498949, 1.0);
    return 2.0 * M_PI * (static_cast<double>(coord) + 0.3 + 0.4 * frac) /
           static_cast<double>(N);
  };
  for (int c : circ) {
    vid_of_coord[c] = static_cast<int>(vpos.size());
    vpos.push_back(Vec2{std::cos(theta(c)), std::sin(theta(c))});
  }

  // chord crossings
  auto ccw_between = [&](int x, int lo, int hi) {
    int span = ((hi - lo) % N + N) % N;
    int off = ((x - lo) % N + N) % N;
    return off > 0 && off < span;
  };
  struct Hit {
    double t;
    int vertex;
  };
  std::vector<std::vector<Hit>> hits(lay.chords.size());
  long long crossings = 0;
  for (size_t i = 0; i < lay.chords.size(); ++i) {
    for (size_t j = i + 1; j < lay.chords.size(); ++j) {
      const auto& A = lay.chords[i];
      const auto& B = lay.chords[j];
      if (ccw_between(B.from, A.from, A.to) == ccw_between(B.to, A.from, A.to))
        continue;
      Vec2 p0 = vpos[static_cast<size_t>(vid_of_coord[A.from])];
      Vec2 p1 = vpos[static_cast<size_t>(vid_of_coord[A.to])];
      Vec2 q0 = vpos[static_cast<size_t>(vid_of_coord[B.from])];
      Vec2 q1 = vpos[static_cast<size_t>(vid_of_coord[B.to])];
      Vec2 dp{p1.x - p0.x, p1.y - p0.y};
      Vec2 dq{q1.x - q0.x, q1.y - q0.y};
      Vec2 pq{q0.x - p0.x, q0.y - p0.y};
      double den = cross2(dp, dq);
      if (std::fabs(den) < 1e-12)
        throw Error(ErrorCode::Internal, "degenerate chord arrangement");
      double t = cross2(pq, dq) / den;
      double u = cross2(pq, dp) / den;
      if (t < kEps || t > 1 - kEps || u < kEps || u > 1 - kEps)
        throw Error(ErrorCode::Internal, "chord crossing off the segments");
      int v = static_cast<int>(vpos.size());
      vpos.push_back(Vec2{p0.x + t * dp.x, p0.y + t * dp.y});
      hits[i].push_back(Hit{t, v});
      hits[j].push_back(Hit{u, v});
      ++crossings;
    }
  }

  // undirected edges -> half-edge pairs (2e, 2e+1 are reverses)
  struct Edge {
    int a = 0, b = 0;
    bool is_arc = false;
    int side = -1;  // polygon side for arcs
  };
  std::vector<Edge> edges;
  for (size_t i = 0; i < lay.chords.size(); ++i) {
    auto& h = hits[i];
    std::sort(h.begin(), h.end(),
              [](const Hit& x, const Hit& y) { return x.t < y.t; });
    for (size_t k = 0; k + 1 < h.size(); ++k)
      if (h[k + 1].t - h[k].t < kEps)
        throw Error(ErrorCode::Internal, "coincident chord crossings");
    int prev = vid_of_coord[lay.chords[i].from];
    for (const Hit& hh : h) {
      edges.push_back(Edge{prev, hh.vertex, false, -1});
      prev = hh.vertex;
    }
    edges.push_back(Edge{prev, vid_of_coord[lay.chords[i].to], false, -1});
  }
  auto side_of_src = [&](int coord) {
    for (int s = 0; s < nsides; ++s) {
      int lo = lay.side_first[static_cast<size_t>(s)];
      int hi = corner_coord[static_cast<size_t>(s)];
      if (coord >= lo && coord < hi) return s;
      if (coord == hi) return (s + 1) % nsides;
    }
    throw Error(ErrorCode::Internal, "coordinate outside all sides");
  };
  // inner (counterclockwise) half-edge id of the circle gap starting at circ[k]
  std::vector<int> gap_he(circ.size(), -1);
  for (size_t k = 0; k < circ.size(); ++k) {
    int a = circ[k];
    int b = circ[(k + 1) % circ.size()];
    gap_he[k] = static_cast<int>(edges.size()) * 2;
    edges.push_back(Edge{vid_of_coord[a], vid_of_coord[b], true, side_of_src(a)});
  }

  const int H = static_cast<int>(edges.size()) * 2;
  auto he_tail = [&](int h) {
    const Edge& e = edges[static_cast<size_t>(h / 2)];
    return (h & 1) ? e.b : e.a;
  };
  auto he_head = [&](int h) {
    const Edge& e = edges[static_cast<size_t>(h / 2)];
    return (h & 1) ? e.a : e.b;
  };

  // rotation at each vertex: outgoing half-edges sorted counterclockwise
  std::vector<std::vector<int>> rot(vpos.size());
  for (int h = 0; h < H; ++h)
    rot[static_cast<size_t>(he_tail(h))].push_back(h);
  for (size_t v = 0; v < rot.size(); ++v) {
    std::sort(rot[v].begin(), rot[v].end(), [&](int x, int y) {
      Vec2 a{vpos[static_cast<size_t>(he_head(x))].x - vpos[v].x,
             vpos[static_cast<size_t>(he_head(x))].y - vpos[v].y};
      Vec2 b{vpos[static_cast<size_t>(he_head(y))].x - vpos[v].x,
             vpos[static_cast<size_t>(he_head(y))].y - vpos[v].y};
      return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
    });
  }
  // successor along the face with interior on the left: the clockwise
  // neighbor of the reverse edge around its tail
  std::vector<int> nxt(static_cast<size_t>(H), -1);
  for (int h = 0; h < H; ++h) {
    int r = h ^ 1;
    const auto& ring = rot[static_cast<size_t>(he_tail(r))];
    size_t idx = static_cast<size_t>(
        std::find(ring.begin(), ring.end(), r) - ring.begin());
    nxt[static_cast<size_t>(h)] =
        ring[(idx + ring.size() - 1) % ring.size()];
  }
  std::vector<int> prv(static_cast<size_t>(H), -1);
  for (int h = 0; h < H; ++h) prv[static_cast<size_t>(nxt[static_cast<size_t>(h)])] = h;

  // faces; the unique clockwise one is the outside of the disk
  std::vector<int> face(static_cast<size_t>(H), -1);
  std::vector<char> face_inner;
  int nfaces = 0;
  for (int h0 = 0; h0 < H; ++h0) {
    if (face[static_cast<size_t>(h0)] >= 0) continue;
    double area = 0;
    int h = h0;
    do {
      face[static_cast<size_t>(h)] = nfaces;
      area += cross2(vpos[static_cast<size_t>(he_tail(h))],
                     vpos[static_cast<size_t>(he_head(h))]);
      h = nxt[static_cast<size_t>(h)];
    } while (h != h0);
    face_inner.push_back(area > 0 ? 1 : 0);
    ++nfaces;
  }
  if (std::count(face_inner.begin(), face_inner.end(), 0) != 1)
    throw Error(ErrorCode::Internal, "face trace lost the outer face");

  // glue the cut sides: the two copies carry mirror-ordered gap chains
  std::vector<int> twin(static_cast<size_t>(H), -1);
  std::vector<std::vector<int>> side_gaps(static_cast<size_t>(nsides));
  for (size_t k = 0; k < circ.size(); ++k) {
    int s = edges[static_cast<size_t>(gap_he[k] / 2)].side;
    side_gaps[static_cast<size_t>(s)].push_back(static_cast<int>(k));
  }
  for (int s = 0; s < nsides; ++s) {
    // chain order: ascending coordinate measured from the side's corner start
    int anchor = lay.side_first[static_cast<size_t>(s)] - 1;
    std::sort(side_gaps[static_cast<size_t>(s)].begin(),
              side_gaps[static_cast<size_t>(s)].end(), [&](int x, int y) {
                int cx = ((circ[static_cast<size_t>(x)] - anchor) % N + N) % N;
                int cy = ((circ[static_cast<size_t>(y)] - anchor) % N + N) % N;
                return cx < cy;
              });
  }
  for (int c = 0; c < m.num_cuts(); ++c) {
    int sp = m.cut_side(c, +1);
    int sm = m.cut_side(c, -1);
    const auto& gp = side_gaps[static_cast<size_t>(sp)];
    const auto& gm = side_gaps[static_cast<size_t>(sm)];
    if (gp.size() != gm.size())
      throw Error(ErrorCode::Internal, "cut copies disagree on gap count");
    const size_t n = gp.size();
    for (size_t j = 0; j < n; ++j) {
      int ha = gap_he[static_cast<size_t>(gp[j])];
      int hb = gap_he[static_cast<size_t>(gm[n - 1 - j])];
      // interior gaps of the same cut meet real points whose layout partners
      // must agree; a mismatch means the mirror convention broke
      if (j + 1 < n) {
        int pa = circ[static_cast<size_t>(gp[j + 1])];
        int pb = circ[static_cast<size_t>(gm[n - 1 - j])];
        if (lay.partner[static_cast<size_t>(pa)] != pb)
          throw Error(ErrorCode::Internal, "cut gluing out of mirror order");
      }
      twin[static_cast<size_t>(ha)] = hb;
      twin[static_cast<size_t>(hb)] = ha;
    }
  }

  // glued complement regions
  DSU freg(static_cast<size_t>(nfaces));
  for (int h = 0; h < H; ++h)
    if (twin[static_cast<size_t>(h)] >= 0)
      freg.unite(face[static_cast<size_t>(h)],
                 face[static_cast<size_t>(twin[static_cast<size_t>(h)])]);

  // corner orbits: the corner after h merges, across a glued edge g=nxt(h),
  // with the corner after twin(g)
  DSU corner(static_cast<size_t>(H));
  for (int g = 0; g < H; ++g) {
    if (twin[static_cast<size_t>(g)] < 0) continue;
    if (!face_inner[static_cast<size_t>(face[static_cast<size_t>(g)])]) continue;
    corner.unite(prv[static_cast<size_t>(g)], twin[static_cast<size_t>(g)]);
  }

  struct Region {
    long long F = 0, Eint = 0, Ebnd = 0;
    std::set<int> corners;
    std::vector<int> bnd_he;
  };
  std::map<int, Region> regions;
  for (int h = 0; h < H; ++h) {
    int f = face[static_cast<size_t>(h)];
    if (!face_inner[static_cast<size_t>(f)]) continue;
    Region& r = regions[freg.find(f)];
    r.corners.insert(corner.find(h));
    if (twin[static_cast<size_t>(h)] >= 0) {
      if (h < twin[static_cast<size_t>(h)]) r.Eint += 1;
    } else {
      r.Ebnd += 1;
      r.bnd_he.push_back(h);
    }
  }
  for (int f = 0; f < nfaces; ++f)
    if (face_inner[static_cast<size_t>(f)]) regions[freg.find(f)].F += 1;

  RegionCensus out;
  out.crossings = crossings;
  out.filling = true;
  for (auto& [root, r] : regions) {
    (void)root;
    long long chi = static_cast<long long>(r.corners.size()) -
                    (r.Eint + r.Ebnd) + r.F;
    out.chi_sum += chi;

    // frontier circuits
    std::set<int> seen;
    int pure_surface = 0, pure_curve = 0, mixed = 0, circuits = 0;
    for (int h0 : r.bnd_he) {
      if (seen.count(h0)) continue;
      ++circuits;
      bool any_arc = false, any_seg = false;
      int h = h0;
      do {
        seen.insert(h);
        if (edges[static_cast<size_t>(h / 2)].is_arc)
          any_arc = true;
        else
          any_seg = true;
        int g = nxt[static_cast<size_t>(h)];
        while (twin[static_cast<size_t>(g)] >= 0)
          g = nxt[static_cast<size_t>(twin[static_cast<size_t>(g)])];
        h = g;
      } while (h != h0);
      if (any_arc && any_seg)
        ++mixed;
      else if (any_arc)
        ++pure_surface;
      else
        ++pure_curve;
    }
    if (mixed)
      throw Error(ErrorCode::Internal, "curve frontier touches the boundary");
    bool disk = chi == 1 && circuits == 1 && pure_curve == 1;
    bool collar =
        chi == 0 && circuits == 2 && pure_surface == 1 && pure_curve == 1;
    if (!disk && !collar) out.filling = false;
  }

  if (out.chi_sum !=
      static_cast<long long>(m.euler_characteristic()) + crossings)
    throw Error(ErrorCode::Internal,
                "complement accounting disagrees with the region trace");
  return out;
}

CurveWord resolve_curve(const SurfaceModel& m, const std::string& name) {
  if (m.has_curve(name)) return m.curve(name);
  try {
    CurveWord c;
    c.surface = m.id;
    c.letters = cyclic_reduce(m.parse_letters(name));
    return c;
  } catch (const Error&) {
    throw Error(ErrorCode::UnknownGenerator,
                "unknown curve " + name + " on surface " + m.id);
  }
}

}  // namespace

PennerReport penner_check(const Catalog& cat, const std::string& surface,
                          const TwistWord& w,
                          const std::vector<std::string>& plus,
                          const std::vector<std::string>& minus) {
  const SurfaceModel& m = cat.get(surface);
  check_word(m, w);
  std::map<std::string, CurveWord> family;
  std::vector<std::string> names;  // plus then minus, deduplicated
  for (const auto& set : {plus, minus}) {
    for (const std::string& n : set) {
      if (!family.count(n)) names.push_back(n);
      family.emplace(n, resolve_curve(m, n));
    }
  }
  auto in = [](const std::vector<std::string>& v, const std::string& n) {
    return std::find(v.begin(), v.end(), n) != v.end();
  };

  PennerReport rep;
  rep.reduced = apply_chain_rewrites(m, normalize_syllables(w.syllables));
  for (const std::string& b : m.boundary_labels)
    rep.reduced = strip_boundary_twists(m, rep.reduced, b, nullptr);

  rep.signs_ok = true;
  for (const Syllable& s : rep.reduced) {
    bool p = in(plus, s.gen), q = in(minus, s.gen);
    if ((!p && !q) || (p && s.exp < 0) || (q && s.exp > 0)) rep.signs_ok = false;
  }

  rep.disjoint_ok = true;
  for (const auto& set : {plus, minus}) {
    for (size_t i = 0; i < set.size(); ++i)
      for (size_t j = i + 1; j < set.size(); ++j) {
        DrawnItem a = as_item(m, family.at(set[i]));
        DrawnItem b = as_item(m, family.at(set[j]));
        if (pair_crossings(m, a, b) != 0) rep.disjoint_ok = false;
      }
  }

  std::vector<DrawnItem> items;
  for (const std::string& n : names) items.push_back(as_item(m, family.at(n)));
  rep.filling_ok = complement_census(m, items).filling;

  rep.both_nonempty_used = !plus.empty() && !minus.empty();
  for (const std::string& n : names) {
    bool used = false;
    for (const Syllable& s : rep.reduced) used = used || s.gen == n;
    if (!used) rep.both_nonempty_used = false;
  }

  rep.certified = rep.signs_ok && rep.disjoint_ok && rep.filling_ok &&
                  rep.both_nonempty_used;
  if (!rep.certified) {
    if (!rep.signs_ok)
      rep.reason = "signs";
    else if (!rep.disjoint_ok)
      rep.reason = "disjoint";
    else if (!rep.filling_ok)
      rep.reason = "filling";
    else
      rep.reason = "usage";
  }
  return rep;
}

}  // namespace obt
