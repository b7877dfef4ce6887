#include "obtwist/curves.hpp"

#include <algorithm>
#include <cstdlib>

#include "obtwist/errors.hpp"

namespace obt {
namespace {

// A ray walks the letters of an item away from a passage or endpoint.  For
// backward walks letters are negated so a ray always reads like a forward
// itinerary.  Cyclic items wrap; arcs terminate at an endpoint side.
struct Ray {
  const DrawnItem* it = nullptr;
  int idx = 0;    // next letter position
  int step = +1;  // +1 forward, -1 backward (negated)
  const SurfaceModel* m = nullptr;

  // Returns the next letter, or 0 with *term_side set when the walk leaves
  // the word through an arc endpoint.  *at reports the original position of
  // the letter read.
  Letter next(int* term_side, int* at = nullptr) {
    const auto& ls = it->letters;
    const int n = static_cast<int>(ls.size());
    if (idx < 0 || idx >= n) {
      if (!it->is_arc) {
        // cyclic wrap
        idx = ((idx % n) + n) % n;
      } else {
        const ArcEnd& e = (step > 0) ? it->end : it->start;
        *term_side = m->boundaries[static_cast<size_t>(e.boundary)]
                         .mark_sides[static_cast<size_t>(e.mark)];
        return 0;
      }
    }
    if (at) *at = idx;
    Letter l = ls[static_cast<size_t>(idx)];
    idx += step;
    return step > 0 ? l : inverse_letter(l);
  }
};

Ray forward_ray(const SurfaceModel& m, const DrawnItem& it, int from) {
  return Ray{&it, from + 1, +1, &m};
}
Ray backward_ray(const SurfaceModel& m, const DrawnItem& it, int from) {
  return Ray{&it, from - 1, -1, &m};
}

struct Passage {
  int item = 0;
  int pos = 0;
  Letter letter = 0;
};

struct Token {
  int item = 0;
  bool is_end = false;
};

// Walks two rays through the polygon until their itineraries diverge.
// `entry` is the side both strands entered through.  verdict is -1/+1 when
// the divergence orders p's strand before/after q's in ccw distance from the
// entry side (smaller distance = -1), or 0 on a full tie.  The shared prefix
// is reported too: its length, its final letter, and the positions of that
// letter in both words.
struct WalkEnd {
  int verdict = 0;
  long long shared = 0;
  Letter last = 0;
  int ppos = -1, qpos = -1;
};

WalkEnd walk_rays(const SurfaceModel& m, Ray rp, Ray rq, int entry,
                  long long limit) {
  const int n = static_cast<int>(m.polygon.size());
  WalkEnd out;
  int s = entry;
  for (long long j = 0; j <= limit; ++j) {
    int tp = -1, tq = -1, pp = -1, qq = -1;
    Letter lp = rp.next(&tp, &pp);
    Letter lq = rq.next(&tq, &qq);
    if (lp != 0 && lq != 0 && lp == lq) {
      s = m.reentry_side(lp);
      out.shared = j + 1;
      out.last = lp;
      out.ppos = pp;
      out.qpos = qq;
      continue;
    }
    if (lp == 0 && lq == 0 && tp == tq) return out;  // shared terminal
    int sp = (lp != 0) ? m.exit_side(lp) : tp;
    int sq = (lq != 0) ? m.exit_side(lq) : tq;
    int dp = ((sp - s) % n + n) % n;
    int dq = ((sq - s) % n + n) % n;
    out.verdict = dp < dq ? -1 : +1;
    return out;
  }
  return out;  // periodic tie
}

int ray_divergence(const SurfaceModel& m, Ray rp, Ray rq, int entry,
                   long long limit) {
  return walk_rays(m, rp, rq, entry, limit).verdict;
}

long long tie_limit(const DrawnItem& a, const DrawnItem& b) {
  return static_cast<long long>(a.letters.size()) +
         static_cast<long long>(b.letters.size()) + 4;
}

class Drawing {
 public:
  Drawing(const SurfaceModel& m, std::vector<DrawnItem> items)
      : m_(m), items_(std::move(items)) {
    collect();
    sort_all();
    assign_coords();
    build_chords();
  }

  const SurfaceModel& model() const { return m_; }
  int total_coords() const { return ncoords_; }

  struct Chord {
    int from = 0;  // circle position, travel order
    int to = 0;
    int item = 0;
  };
  const std::vector<Chord>& chords() const { return chords_; }

  // circle position just past every real point on side s (virtual slot)
  int virtual_top(int s) const {
    return side_base_[static_cast<size_t>(s)] +
           side_count_[static_cast<size_t>(s)];
  }

  // Probe endpoint for an imaginary strand passing through side s, placed at
  // the cut-order end of the cut.  The gluing mirrors the -dir copy, so the
  // same surface point sits past all real points on the +dir copy but before
  // all of them on the -dir copy (the previous side's spare slot).
  int probe_slot(int s) const {
    const Side& sd = m_.polygon[static_cast<size_t>(s)];
    if (sd.kind == SideKind::Cut && sd.dir < 0) {
      int b = side_base_[static_cast<size_t>(s)] - 1;
      return b < 0 ? ncoords_ - 1 : b;
    }
    return virtual_top(s);
  }

  bool ccw_between(int x, int lo, int hi) const {
    int span = ((hi - lo) % ncoords_ + ncoords_) % ncoords_;
    int off = ((x - lo) % ncoords_ + ncoords_) % ncoords_;
    return off > 0 && off < span;
  }
  bool interleaved(int a1, int a2, int b1, int b2) const {
    return ccw_between(b1, a1, a2) != ccw_between(b2, a1, a2);
  }

  CurveLayout layout() const {
    CurveLayout out;
    out.ncoords = ncoords_;
    for (const Chord& c : chords_)
      out.chords.push_back(CurveLayout::Chord{c.from, c.to, c.item});
    out.partner.assign(static_cast<size_t>(ncoords_), -1);
    for (size_t k = 0; k < items_.size(); ++k) {
      for (size_t i = 0; i < items_[k].letters.size(); ++i) {
        int e = exit_coord_[k][i];
        int r = reentry_coord_[k][i];
        out.partner[static_cast<size_t>(e)] = r;
        out.partner[static_cast<size_t>(r)] = e;
      }
    }
    for (size_t s = 0; s < side_base_.size(); ++s) {
      out.side_first.push_back(side_base_[s]);
      out.side_npoints.push_back(side_count_[s]);
    }
    return out;
  }

 private:
  const SurfaceModel& m_;
  std::vector<DrawnItem> items_;
  std::vector<std::vector<Passage>> by_cut_;
  std::vector<std::vector<Token>> by_side_;
  std::vector<int> side_base_, side_count_;
  int ncoords_ = 0;
  std::vector<std::vector<int>> exit_coord_, reentry_coord_;
  std::vector<int> start_tok_, end_tok_;
  std::vector<Chord> chords_;

  void collect() {
    by_cut_.assign(m_.cut_names.size(), {});
    by_side_.assign(m_.polygon.size(), {});
    for (size_t k = 0; k < items_.size(); ++k) {
      const DrawnItem& it = items_[k];
      for (size_t i = 0; i < it.letters.size(); ++i) {
        Letter l = it.letters[i];
        by_cut_[static_cast<size_t>(std::abs(l) - 1)].push_back(
            Passage{static_cast<int>(k), static_cast<int>(i), l});
      }
      if (it.is_arc) {
        int ss = m_.boundaries[static_cast<size_t>(it.start.boundary)]
                     .mark_sides[static_cast<size_t>(it.start.mark)];
        int es = m_.boundaries[static_cast<size_t>(it.end.boundary)]
                     .mark_sides[static_cast<size_t>(it.end.mark)];
        by_side_[static_cast<size_t>(ss)].push_back(
            Token{static_cast<int>(k), false});
        by_side_[static_cast<size_t>(es)].push_back(
            Token{static_cast<int>(k), true});
      }
    }
  }

  // rays of a passage on the side of the cut it re-enters through (-dir copy)
  Ray minus_ray(const Passage& p) const {
    const DrawnItem& it = items_[static_cast<size_t>(p.item)];
    return p.letter > 0 ? forward_ray(m_, it, p.pos)
                        : backward_ray(m_, it, p.pos);
  }
  Ray plus_ray(const Passage& p) const {
    const DrawnItem& it = items_[static_cast<size_t>(p.item)];
    return p.letter > 0 ? backward_ray(m_, it, p.pos)
                        : forward_ray(m_, it, p.pos);
  }

  // strict "p is earlier along the cut" order
  bool passage_less(const Passage& p, const Passage& q) const {
    if (p.item == q.item && p.pos == q.pos) return false;
    const DrawnItem& ip = items_[static_cast<size_t>(p.item)];
    const DrawnItem& iq = items_[static_cast<size_t>(q.item)];
    long long lim = tie_limit(ip, iq);
    int cut = std::abs(p.letter) - 1;
    // divergence behind the -dir copy: nearer exit leaves earlier
    int r = ray_divergence(m_, minus_ray(p), minus_ray(q),
                           m_.cut_side(cut, -1), lim);
    if (r != 0) return r < 0;
    // divergence behind the +dir copy: nearer exit leaves later
    r = ray_divergence(m_, plus_ray(p), plus_ray(q), m_.cut_side(cut, +1),
                       lim);
    if (r != 0) return r > 0;
    // parallel strands: keep copies coherent across corridors
    int sp = p.letter > 0 ? +1 : -1;
    int sq = q.letter > 0 ? +1 : -1;
    if (sp != sq) return sp < 0;  // reversed strand of the pair goes first
    bool key = (p.item != q.item) ? p.item < q.item : p.pos < q.pos;
    return sp > 0 ? !key : key;
  }

  Ray token_ray(const Token& t) const {
    const DrawnItem& it = items_[static_cast<size_t>(t.item)];
    return t.is_end
               ? backward_ray(m_, it, static_cast<int>(it.letters.size()))
               : forward_ray(m_, it, -1);
  }

  bool token_less(const Token& p, const Token& q, int side) const {
    if (p.item == q.item && p.is_end == q.is_end) return false;
    const DrawnItem& ip = items_[static_cast<size_t>(p.item)];
    const DrawnItem& iq = items_[static_cast<size_t>(q.item)];
    // endpoints slide along the boundary: nearer exit anchors later
    int r = ray_divergence(m_, token_ray(p), token_ray(q), side,
                           tie_limit(ip, iq));
    if (r != 0) return r > 0;
    if (p.is_end != q.is_end) return !p.is_end;  // start anchors first
    bool key = p.item < q.item;
    return p.is_end ? !key : key;
  }

  void sort_all() {
    for (auto& v : by_cut_)
      std::sort(v.begin(), v.end(), [this](const Passage& a, const Passage& b) {
        return passage_less(a, b);
      });
    for (size_t s = 0; s < by_side_.size(); ++s)
      std::sort(by_side_[s].begin(), by_side_[s].end(),
                [this, s](const Token& a, const Token& b) {
                  return token_less(a, b, static_cast<int>(s));
                });
  }

  void assign_coords() {
    const int nsides = static_cast<int>(m_.polygon.size());
    side_base_.assign(static_cast<size_t>(nsides), 0);
    side_count_.assign(static_cast<size_t>(nsides), 0);
    exit_coord_.resize(items_.size());
    reentry_coord_.resize(items_.size());
    for (size_t k = 0; k < items_.size(); ++k) {
      exit_coord_[k].assign(items_[k].letters.size(), -1);
      reentry_coord_[k].assign(items_[k].letters.size(), -1);
    }
    start_tok_.assign(items_.size(), -1);
    end_tok_.assign(items_.size(), -1);

    int pos = 0;
    for (int s = 0; s < nsides; ++s) {
      side_base_[static_cast<size_t>(s)] = pos;
      const Side& sd = m_.polygon[static_cast<size_t>(s)];
      if (sd.kind == SideKind::Boundary) {
        const auto& toks = by_side_[static_cast<size_t>(s)];
        side_count_[static_cast<size_t>(s)] = static_cast<int>(toks.size());
        for (const Token& t : toks) {
          (t.is_end ? end_tok_ : start_tok_)[static_cast<size_t>(t.item)] =
              pos++;
        }
      } else {
        const auto& ps = by_cut_[static_cast<size_t>(sd.cut)];
        side_count_[static_cast<size_t>(s)] = static_cast<int>(ps.size());
        // the -dir copy carries the mirror image of the cut order
        for (size_t r = 0; r < ps.size(); ++r) {
          const Passage& p =
              (sd.dir > 0) ? ps[r] : ps[ps.size() - 1 - r];
          int psign = p.letter > 0 ? +1 : -1;
          auto& tab = (psign == sd.dir) ? exit_coord_ : reentry_coord_;
          tab[static_cast<size_t>(p.item)][static_cast<size_t>(p.pos)] =
              pos;
          ++pos;
        }
      }
      ++pos;  // one spare slot per side for twist-table probes
    }
    ncoords_ = pos;
  }

  void build_chords() {
    for (size_t k = 0; k < items_.size(); ++k) {
      const DrawnItem& it = items_[k];
      const int L = static_cast<int>(it.letters.size());
      const int ki = static_cast<int>(k);
      if (!it.is_arc) {
        for (int i = 0; i < L; ++i)
          chords_.push_back(Chord{
              reentry_coord_[k][static_cast<size_t>(i)],
              exit_coord_[k][static_cast<size_t>((i + 1) % L)], ki});
      } else if (L == 0) {
        chords_.push_back(Chord{start_tok_[k], end_tok_[k], ki});
      } else {
        chords_.push_back(Chord{start_tok_[k], exit_coord_[k][0], ki});
        for (int i = 0; i + 1 < L; ++i)
          chords_.push_back(
              Chord{reentry_coord_[k][static_cast<size_t>(i)],
                    exit_coord_[k][static_cast<size_t>(i + 1)], ki});
        chords_.push_back(Chord{
            reentry_coord_[k][static_cast<size_t>(L - 1)], end_tok_[k], ki});
      }
    }
  }
};

// --- crossing counts -------------------------------------------------------
//
// Minimal crossing numbers are computed combinatorially instead of off a
// drawing: a concrete drawing fixes one slot order per cut, and orders chosen
// cut by cut need not be jointly minimal.  Two tallies cover everything:
//
//  1. chord pairs forced by the polygon: each strand between consecutive cut
//     passages is a chord between two polygon sides, and two chords whose four
//     sides are distinct and interleaved cross no matter where on the sides
//     their endpoints sit;
//  2. linked passage pairs through a shared cut: if the itineraries on the
//     two copies of the cut demand opposite slot orders, the strands must
//     cross once somewhere along their shared corridor.  A corridor of
//     parallel strands passes many cuts, so each corridor is counted at one
//     canonical passage pair only.
//
// Powers of a cyclic word are peeled down to the primitive root first: the k
// parallel strands of a k-th power tie under every itinerary comparison, yet
// they spiral and force k-1 crossings, and two curves sharing an unoriented
// root cross twice per self-crossing of the root.

struct SideChord {
  int s1 = 0, s2 = 0;
};

int mark_side(const SurfaceModel& m, const ArcEnd& e) {
  return m.boundaries[static_cast<size_t>(e.boundary)]
      .mark_sides[static_cast<size_t>(e.mark)];
}

std::vector<SideChord> side_chords(const SurfaceModel& m, const DrawnItem& it) {
  std::vector<SideChord> out;
  const auto& ls = it.letters;
  const int L = static_cast<int>(ls.size());
  if (!it.is_arc) {
    for (int i = 0; i < L; ++i)
      out.push_back(SideChord{
          m.reentry_side(ls[static_cast<size_t>(i)]),
          m.exit_side(ls[static_cast<size_t>((i + 1) % L)])});
  } else if (L == 0) {
    out.push_back(SideChord{mark_side(m, it.start), mark_side(m, it.end)});
  } else {
    out.push_back(SideChord{mark_side(m, it.start), m.exit_side(ls[0])});
    for (int i = 0; i + 1 < L; ++i)
      out.push_back(SideChord{m.reentry_side(ls[static_cast<size_t>(i)]),
                              m.exit_side(ls[static_cast<size_t>(i + 1)])});
    out.push_back(SideChord{m.reentry_side(ls[static_cast<size_t>(L - 1)]),
                            mark_side(m, it.end)});
  }
  return out;
}

// forced crossing of two chords with all four sides distinct
bool sides_interleave(int nsides, const SideChord& a, const SideChord& b) {
  if (a.s1 == b.s1 || a.s1 == b.s2 || a.s2 == b.s1 || a.s2 == b.s2)
    return false;
  if (a.s1 == a.s2 || b.s1 == b.s2) return false;
  auto between = [nsides](int x, int lo, int hi) {
    int span = ((hi - lo) % nsides + nsides) % nsides;
    int off = ((x - lo) % nsides + nsides) % nsides;
    return off > 0 && off < span;
  };
  return between(b.s1, a.s1, a.s2) != between(b.s2, a.s1, a.s2);
}

long long forced_chord_pairs(const SurfaceModel& m, const DrawnItem& a,
                             const DrawnItem& b) {
  const int n = static_cast<int>(m.polygon.size());
  auto ca = side_chords(m, a), cb = side_chords(m, b);
  long long c = 0;
  for (const SideChord& x : ca)
    for (const SideChord& y : cb)
      if (sides_interleave(n, x, y)) ++c;
  return c;
}

long long forced_chord_self(const SurfaceModel& m, const DrawnItem& a) {
  const int n = static_cast<int>(m.polygon.size());
  auto ch = side_chords(m, a);
  long long c = 0;
  for (size_t i = 0; i < ch.size(); ++i)
    for (size_t j = i + 1; j < ch.size(); ++j)
      if (sides_interleave(n, ch[i], ch[j])) ++c;
  return c;
}

// rays of a strand crossing a cut, behind the reentry (-dir) and exit (+dir)
// copies; mirrors Drawing::minus_ray / plus_ray
Ray strand_minus_ray(const SurfaceModel& m, const DrawnItem& it, int pos) {
  return it.letters[static_cast<size_t>(pos)] > 0 ? forward_ray(m, it, pos)
                                                  : backward_ray(m, it, pos);
}
Ray strand_plus_ray(const SurfaceModel& m, const DrawnItem& it, int pos) {
  return it.letters[static_cast<size_t>(pos)] > 0 ? backward_ray(m, it, pos)
                                                  : forward_ray(m, it, pos);
}

struct PairKey {
  int cut = 0, p1 = 0, p2 = 0;
  friend bool operator<(const PairKey& a, const PairKey& b) {
    if (a.cut != b.cut) return a.cut < b.cut;
    if (a.p1 != b.p1) return a.p1 < b.p1;
    return a.p2 < b.p2;
  }
};

PairKey make_key(int cut, int pa, int pb, bool sorted) {
  if (sorted && pb < pa) std::swap(pa, pb);
  return PairKey{cut, pa, pb};
}

// True when the passage pair (a at pos i, b at pos j, same cut) forces a
// crossing and this pair is the corridor's canonical witness.  The pair is
// linked when the itineraries behind the two copies of the cut demand
// opposite slot orders: the -copy walk prefers the strand whose exit is
// nearer (verdict < 0 puts a first), the +copy walk the one whose exit is
// farther (verdict > 0 puts a first), so equal nonzero verdicts conflict.
// Among the linked pairs of one corridor, the witness is picked by which end
// of the corridor diverges immediately behind its reentry copy; when both or
// neither end qualifies, the lexicographically smaller (cut, positions) key
// breaks the tie.  `sorted` orders each key's positions (for pairs of
// passages of a single item, where the two strand roles are interchangeable).
bool corridor_witness(const SurfaceModel& m, const DrawnItem& a, int i,
                      const DrawnItem& b, int j, long long lim, bool sorted) {
  const int cut = letter_cut(a.letters[static_cast<size_t>(i)]);
  WalkEnd wm = walk_rays(m, strand_minus_ray(m, a, i), strand_minus_ray(m, b, j),
                         m.cut_side(cut, -1), lim);
  WalkEnd wp = walk_rays(m, strand_plus_ray(m, a, i), strand_plus_ray(m, b, j),
                         m.cut_side(cut, +1), lim);
  if (wm.verdict == 0 || wm.verdict != wp.verdict) return false;  // unlinked
  if (wm.shared == 0 && wp.shared == 0) return true;  // corridor of one cut
  if (wm.shared > 0 && wp.shared > 0) return false;   // corridor interior
  PairKey mine = make_key(cut, i, j, sorted);
  if (wm.shared == 0) {
    // this pair sits at the -side end; the far end lies past the +side walk
    // and diverges behind its own reentry copy iff the walk's last shared
    // letter re-enters through a -copy (letter > 0)
    if (wp.last < 0) return true;  // far end diverges behind its exit copy
    return mine < make_key(letter_cut(wp.last), wp.ppos, wp.qpos, sorted);
  }
  // +side end: defer to the far end when it diverges behind its reentry copy
  if (wm.last > 0) return false;
  return mine < make_key(letter_cut(wm.last), wm.ppos, wm.qpos, sorted);
}

long long linked_corridors_pair(const SurfaceModel& m, const DrawnItem& a,
                                const DrawnItem& b) {
  const long long lim = tie_limit(a, b);
  long long c = 0;
  for (int i = 0; i < static_cast<int>(a.letters.size()); ++i)
    for (int j = 0; j < static_cast<int>(b.letters.size()); ++j) {
      if (letter_cut(a.letters[static_cast<size_t>(i)]) !=
          letter_cut(b.letters[static_cast<size_t>(j)]))
        continue;
      if (corridor_witness(m, a, i, b, j, lim, false)) ++c;
    }
  return c;
}

long long linked_corridors_self(const SurfaceModel& m, const DrawnItem& a) {
  const long long lim = tie_limit(a, a);
  long long c = 0;
  for (int i = 0; i < static_cast<int>(a.letters.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(a.letters.size()); ++j) {
      if (letter_cut(a.letters[static_cast<size_t>(i)]) !=
          letter_cut(a.letters[static_cast<size_t>(j)]))
        continue;
      if (corridor_witness(m, a, i, a, j, lim, true)) ++c;
    }
  return c;
}

// smallest p dividing |w| with w invariant under rotation by p
int primitive_period(const std::vector<Letter>& w) {
  const int n = static_cast<int>(w.size());
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = 0; ok && i < n; ++i)
      if (w[static_cast<size_t>(i)] != w[static_cast<size_t>((i + p) % n)])
        ok = false;
    if (ok) return p;
  }
  return n;
}

DrawnItem primitive_root(const DrawnItem& a, int period) {
  DrawnItem u = a;
  u.letters.assign(a.letters.begin(), a.letters.begin() + period);
  return u;
}

long long direct_self(const SurfaceModel& m, const DrawnItem& a) {
  return forced_chord_self(m, a) + linked_corridors_self(m, a);
}

void check_item(const SurfaceModel& m, const DrawnItem& it) {
  for (Letter l : it.letters) {
    int c = std::abs(l) - 1;
    if (l == 0 || c >= static_cast<int>(m.cut_names.size()))
      throw Error(ErrorCode::Internal, "letter outside surface alphabet");
  }
  if (it.is_arc) {
    auto ok = [&](const ArcEnd& e) {
      return e.boundary >= 0 &&
             e.boundary < static_cast<int>(m.boundaries.size()) &&
             e.mark >= 0 &&
             e.mark < static_cast<int>(
                          m.boundaries[static_cast<size_t>(e.boundary)]
                              .mark_sides.size());
    };
    if (!ok(it.start) || !ok(it.end))
      throw Error(ErrorCode::EndpointMismatch, "arc endpoint out of range");
  }
}

}  // namespace

DrawnItem as_item(const SurfaceModel& m, const CurveWord& c) {
  DrawnItem it;
  it.is_arc = false;
  it.letters = cyclic_reduce(c.letters);
  check_item(m, it);
  return it;
}

DrawnItem as_item(const SurfaceModel& m, const ArcWord& a) {
  DrawnItem it;
  it.is_arc = true;
  it.letters = free_reduce(a.letters);
  it.start = a.start;
  it.end = a.end;
  check_item(m, it);
  return it;
}

CurveLayout layout_items(const SurfaceModel& m,
                         const std::vector<DrawnItem>& items) {
  for (const DrawnItem& it : items) check_item(m, it);
  Drawing d(m, items);
  return d.layout();
}

long long pair_crossings(const SurfaceModel& m, const DrawnItem& a,
                         const DrawnItem& b) {
  check_item(m, a);
  check_item(m, b);
  if (!a.is_arc && !b.is_arc && !a.letters.empty() && !b.letters.empty()) {
    const int pa = primitive_period(a.letters);
    const int pb = primitive_period(b.letters);
    DrawnItem ua = primitive_root(a, pa), ub = primitive_root(b, pb);
    if (pa == pb && canonical_cyclic(ua.letters) == canonical_cyclic(ub.letters)) {
      // parallel strands of a common unoriented root tie under every
      // itinerary comparison; each copy pair crosses twice per root
      // self-crossing
      long long ka = static_cast<long long>(a.letters.size()) / pa;
      long long kb = static_cast<long long>(b.letters.size()) / pb;
      return ka * kb * 2 * direct_self(m, ua);
    }
  }
  return forced_chord_pairs(m, a, b) + linked_corridors_pair(m, a, b);
}

long long self_crossings(const SurfaceModel& m, const DrawnItem& a) {
  check_item(m, a);
  if (a.is_arc || a.letters.empty()) return direct_self(m, a);
  const int p = primitive_period(a.letters);
  const long long k = static_cast<long long>(a.letters.size()) / p;
  // the k strands spiral: k^2 copies of the root's crossings plus k-1 from
  // the strands winding past one another
  return k * k * direct_self(m, primitive_root(a, p)) + (k - 1);
}

Rational collar_progress(const SurfaceModel& m, const ArcWord& arc) {
  const BoundaryInfo& bi =
      m.boundaries[static_cast<size_t>(arc.start.boundary)];
  std::vector<Letter> letters = free_reduce(arc.letters);
  std::vector<Letter> pos = bi.cycle_from_mark(arc.start.mark);
  std::vector<Letter> neg = bi.neg_cycle_from_mark(arc.start.mark);
  const size_t n = pos.size();
  size_t lp = 0, ln = 0;
  while (lp < letters.size() && letters[lp] == pos[lp % n]) ++lp;
  while (ln < letters.size() && letters[ln] == neg[ln % n]) ++ln;
  if (lp > 0) return Rational(static_cast<long long>(lp), static_cast<long long>(n));
  if (ln > 0) return Rational(-static_cast<long long>(ln), static_cast<long long>(n));
  return Rational(0);
}

long long collar_intersection(const SurfaceModel& m, const ArcWord& image,
                              const ArcWord& base, const std::string& B) {
  if (image.surface != m.id || base.surface != m.id)
    throw Error(ErrorCode::SurfaceMismatch,
                "arcs live on a different surface than the model");
  int bidx = m.boundary_index(B);
  if (image.start.boundary != bidx || base.start.boundary != bidx ||
      image.start.mark != base.start.mark)
    throw Error(ErrorCode::EndpointMismatch,
                "arcs must start at the same marked point of " + B);
  Rational diff = collar_progress(m, image) - collar_progress(m, base);
  return diff.num / diff.den;  // integer part, toward zero
}

bool is_boundary_parallel(const SurfaceModel& m, const ArcWord& arc) {
  if (arc.start.boundary != arc.end.boundary) return false;
  const BoundaryInfo& bi =
      m.boundaries[static_cast<size_t>(arc.start.boundary)];
  std::vector<Letter> letters = free_reduce(arc.letters);
  const long long L = static_cast<long long>(letters.size());
  const long long n = static_cast<long long>(bi.cycle.size());
  const long long ws = bi.mark_walk_pos[static_cast<size_t>(arc.start.mark)];
  const long long we = bi.mark_walk_pos[static_cast<size_t>(arc.end.mark)];
  std::vector<Letter> pos = bi.cycle_from_mark(arc.start.mark);
  std::vector<Letter> neg = bi.neg_cycle_from_mark(arc.start.mark);
  bool all_pos = true, all_neg = true;
  for (long long i = 0; i < L; ++i) {
    all_pos = all_pos && letters[static_cast<size_t>(i)] ==
                             pos[static_cast<size_t>(i % n)];
    all_neg = all_neg && letters[static_cast<size_t>(i)] ==
                             neg[static_cast<size_t>(i % n)];
  }
  if (all_pos && (ws + L) % n == we) return true;
  if (all_neg && ((ws - L) % n + n) % n == we) return true;
  return false;
}

TwistTable build_twist_table(const SurfaceModel& m, const std::string& curve) {
  const CurveWord& c = m.curve(curve);
  DrawnItem it = as_item(m, c);
  if (it.letters.empty())
    throw Error(ErrorCode::CatalogCorrupt, "twist curve is trivial: " + curve);
  Drawing d(m, {it});

  TwistTable t;
  t.curve = curve;
  t.base = it.letters;
  t.sides = static_cast<int>(m.polygon.size());
  t.crossings.assign(static_cast<size_t>(t.sides * t.sides), {});

  const auto& ch = d.chords();
  for (int s1 = 0; s1 < t.sides; ++s1) {
    for (int s2 = 0; s2 < t.sides; ++s2) {
      if (s1 == s2) continue;
      int v1 = d.probe_slot(s1);
      int v2 = d.probe_slot(s2);
      std::vector<std::pair<int, int>> hits;
      for (size_t j = 0; j < ch.size(); ++j) {
        if (!d.interleaved(v1, v2, ch[j].from, ch[j].to)) continue;
        int sign = d.ccw_between(ch[j].from, v1, v2) ? +1 : -1;
        hits.emplace_back(static_cast<int>(j), sign);
      }
      // order along the probe chord: nearest to the s1 end first
      std::sort(hits.begin(), hits.end(),
                [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
                  const auto& ca = ch[static_cast<size_t>(a.first)];
                  const auto& cb = ch[static_cast<size_t>(b.first)];
                  // a nearer v1 iff b lies entirely beyond a's chord
                  bool v1_in = d.ccw_between(v1, ca.from, ca.to);
                  int lo = v1_in ? ca.to : ca.from;
                  int hi = v1_in ? ca.from : ca.to;
                  return d.ccw_between(cb.from, lo, hi) &&
                         d.ccw_between(cb.to, lo, hi);
                });
      t.crossings[static_cast<size_t>(s1 * t.sides + s2)] = std::move(hits);
    }
  }
  return t;
}

std::vector<Letter> apply_twist(const SurfaceModel& m, const TwistTable& t,
                                const DrawnItem& item, long long n, int h,
                                size_t keep, bool open_end, bool* truncated) {
  if (truncated) *truncated = false;
  std::vector<Letter> out;
  if (item.letters.empty() && !item.is_arc) return out;
  auto push = [&out](Letter l) {
    if (!out.empty() && out.back() == inverse_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  };
  const long long L = static_cast<long long>(t.base.size());
  auto emit_blocks = [&](int s1, int s2) {
    if (n == 0) return;
    for (const auto& [j, eps] : t.at(s1, s2)) {
      int dir = (n > 0 ? 1 : -1) * eps * h;
      long long reps = n > 0 ? n : -n;
      for (long long r = 0; r < reps; ++r) {
        if (dir > 0) {
          for (long long i = 0; i < L; ++i)
            push(t.base[static_cast<size_t>((j + 1 + i) % L)]);
        } else {
          for (long long i = L - 1; i >= 0; --i)
            push(inverse_letter(t.base[static_cast<size_t>((j + 1 + i) % L)]));
        }
      }
    }
  };

  const auto& ls = item.letters;
  const int len = static_cast<int>(ls.size());
  if (!item.is_arc) {
    for (int i = 0; i < len; ++i) {
      push(ls[static_cast<size_t>(i)]);
      emit_blocks(m.reentry_side(ls[static_cast<size_t>(i)]),
                  m.exit_side(ls[static_cast<size_t>((i + 1) % len)]));
    }
  } else {
    int ss = m.boundaries[static_cast<size_t>(item.start.boundary)]
                 .mark_sides[static_cast<size_t>(item.start.mark)];
    int es = m.boundaries[static_cast<size_t>(item.end.boundary)]
                 .mark_sides[static_cast<size_t>(item.end.mark)];
    if (len == 0) {
      if (!open_end) emit_blocks(ss, es);
    } else {
      emit_blocks(ss, m.exit_side(ls[0]));
      for (int i = 0; i < len; ++i) {
        push(ls[static_cast<size_t>(i)]);
        if (i + 1 < len)
          emit_blocks(m.reentry_side(ls[static_cast<size_t>(i)]),
                      m.exit_side(ls[static_cast<size_t>(i + 1)]));
        else if (!open_end)
          emit_blocks(m.reentry_side(ls[static_cast<size_t>(i)]), es);
      }
    }
  }
  if (keep > 0 && out.size() > keep) {
    out.resize(keep);
    if (truncated) *truncated = true;
  }
  return out;
}

}  // namespace obt
