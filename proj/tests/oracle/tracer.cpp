#include "tracer.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "obtwist/errors.hpp"

namespace obt::oracle {
namespace {

struct Pass {
  int item = 0;
  int pos = 0;
};
struct Tok {
  int item = 0;
  bool is_end = false;
};

struct Chord {
  int from = 0, to = 0;  // circle positions, travel order
  int item = 0;
};

// A drawing of the words on the polygon model is an order of passes along
// every cut and of arc endpoints along every boundary side; each strand
// segment between consecutive polygon exits is a straight chord between its
// two slots, so the crossing count is a pure function of the orders.
struct Orders {
  std::vector<std::vector<Pass>> cuts;
  std::vector<std::vector<Tok>> sides;
};

class State {
 public:
  State(const SurfaceModel& m, std::vector<DrawnItem> items)
      : m_(m), items_(std::move(items)) {
    cut_order_.assign(m_.cut_names.size(), {});
    side_order_.assign(m_.polygon.size(), {});
    for (size_t k = 0; k < items_.size(); ++k) {
      const DrawnItem& it = items_[k];
      for (size_t i = 0; i < it.letters.size(); ++i)
        cut_order_[static_cast<size_t>(letter_cut(it.letters[i]))].push_back(
            Pass{static_cast<int>(k), static_cast<int>(i)});
      if (it.is_arc) {
        side_order_[static_cast<size_t>(mark_side(it.start))].push_back(
            Tok{static_cast<int>(k), false});
        side_order_[static_cast<size_t>(mark_side(it.end))].push_back(
            Tok{static_cast<int>(k), true});
      }
    }
    recount();
  }

  std::vector<std::vector<Pass>>& cut_order() { return cut_order_; }
  std::vector<std::vector<Tok>>& side_order() { return side_order_; }

  // Recomputes the chord layout and crossing counts for the current orders.
  long long recount() {
    assign_coords();
    build_chords();
    total_ = 0;
    btw_[0] = btw_[1] = btw_[2] = 0;
    for (size_t i = 0; i < chords_.size(); ++i)
      for (size_t j = i + 1; j < chords_.size(); ++j)
        if (interleaved(chords_[i], chords_[j])) {
          ++total_;
          ++btw_[static_cast<size_t>(chords_[i].item + chords_[j].item)];
        }
    return total_;
  }

  long long total() const { return total_; }
  // crossings between item a and item b of the current drawing (a == b gives
  // the item's self-crossings); valid for the one- and two-item states here
  long long between(int a, int b) const {
    return btw_[static_cast<size_t>(a + b)];
  }

  // Exhaustive bigon removal on the drawing.  An adjacent swap that lowers
  // the count flattens a bigon; a bigon blocked by a strand running through
  // it is exposed by count-preserving swaps (the strand sliding across a
  // crossing), so those are searched breadth-first under a visited set until
  // a lowering swap appears.  Every crossing-minimal position is reachable
  // this way because minimizing move sequences never need to increase the
  // count.
  void minimize(int effort = 1) {
    // soft caps: exceeding them keeps the best drawing found so far
    long long budget = 400000LL * effort;         // neighbor evaluations
    const size_t level_cap = 3000u * (size_t)effort;  // plateau breadth
    Orders cur{cut_order_, side_order_};
    long long best = recount();
    bool improved = true, capped = false;
    while (improved && !capped && best > 0) {
      improved = false;
      std::unordered_set<std::string> seen;
      std::vector<Orders> frontier{cur};
      seen.insert(encode(cur));
      while (!frontier.empty() && !improved && !capped) {
        std::vector<Orders> level;
        for (const Orders& s : frontier) {
          auto consider = [&](Orders&& t) {
            std::string k = encode(t);
            if (seen.count(k)) return false;
            if (--budget < 0) {
              capped = true;
              return false;
            }
            apply(t);
            long long c = recount();
            if (c < best) {
              best = c;
              cur = std::move(t);
              return true;
            }
            seen.insert(std::move(k));
            if (c == best && level.size() < level_cap)
              level.push_back(std::move(t));
            return false;
          };
          for (size_t c = 0; !improved && !capped && c < s.cuts.size(); ++c)
            for (size_t i = 0; !improved && !capped && i + 1 < s.cuts[c].size();
                 ++i) {
              Orders t = s;
              std::swap(t.cuts[c][i], t.cuts[c][i + 1]);
              improved = consider(std::move(t));
            }
          for (size_t sd = 0; !improved && !capped && sd < s.sides.size(); ++sd)
            for (size_t i = 0;
                 !improved && !capped && i + 1 < s.sides[sd].size(); ++i) {
              Orders t = s;
              std::swap(t.sides[sd][i], t.sides[sd][i + 1]);
              improved = consider(std::move(t));
            }
          if (improved || capped) break;
        }
        frontier = std::move(level);
      }
    }
    apply(cur);
    recount();
  }

 private:
  const SurfaceModel& m_;
  std::vector<DrawnItem> items_;
  std::vector<std::vector<Pass>> cut_order_;
  std::vector<std::vector<Tok>> side_order_;

  int ncoords_ = 0;
  std::vector<std::vector<int>> exit_c_, reentry_c_;
  std::vector<int> start_c_, end_c_;
  std::vector<Chord> chords_;
  long long total_ = 0;
  long long btw_[3] = {0, 0, 0};

  int mark_side(const ArcEnd& e) const {
    return m_.boundaries[static_cast<size_t>(e.boundary)]
        .mark_sides[static_cast<size_t>(e.mark)];
  }

  void apply(const Orders& o) {
    cut_order_ = o.cuts;
    side_order_ = o.sides;
  }

  static std::string encode(const Orders& o) {
    std::string s;
    auto put = [&s](int v) {
      s.push_back(static_cast<char>(v & 0xff));
      s.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    for (const auto& v : o.cuts) {
      for (const Pass& p : v) {
        put(p.item);
        put(p.pos);
      }
      s.push_back('|');
    }
    for (const auto& v : o.sides) {
      for (const Tok& t : v) {
        put(t.item);
        put(t.is_end ? 1 : 0);
      }
      s.push_back('|');
    }
    return s;
  }

  void assign_coords() {
    exit_c_.assign(items_.size(), {});
    reentry_c_.assign(items_.size(), {});
    for (size_t k = 0; k < items_.size(); ++k) {
      exit_c_[k].assign(items_[k].letters.size(), -1);
      reentry_c_[k].assign(items_[k].letters.size(), -1);
    }
    start_c_.assign(items_.size(), -1);
    end_c_.assign(items_.size(), -1);
    int pos = 0;
    for (size_t s = 0; s < m_.polygon.size(); ++s) {
      const Side& sd = m_.polygon[s];
      if (sd.kind == SideKind::Boundary) {
        for (const Tok& t : side_order_[s])
          (t.is_end ? end_c_ : start_c_)[static_cast<size_t>(t.item)] = pos++;
      } else {
        const auto& ord = cut_order_[static_cast<size_t>(sd.cut)];
        // the -dir copy carries the mirror image of the cut order
        for (size_t r = 0; r < ord.size(); ++r) {
          const Pass& p = (sd.dir > 0) ? ord[r] : ord[ord.size() - 1 - r];
          Letter l = items_[static_cast<size_t>(p.item)]
                         .letters[static_cast<size_t>(p.pos)];
          auto& tab = (letter_dir(l) == sd.dir) ? exit_c_ : reentry_c_;
          tab[static_cast<size_t>(p.item)][static_cast<size_t>(p.pos)] = pos++;
        }
      }
    }
    ncoords_ = pos;
  }

  void build_chords() {
    chords_.clear();
    for (size_t k = 0; k < items_.size(); ++k) {
      const DrawnItem& it = items_[k];
      const int L = static_cast<int>(it.letters.size());
      const int ki = static_cast<int>(k);
      if (!it.is_arc) {
        for (int i = 0; i < L; ++i)
          chords_.push_back(Chord{reentry_c_[k][static_cast<size_t>(i)],
                                  exit_c_[k][static_cast<size_t>((i + 1) % L)],
                                  ki});
      } else if (L == 0) {
        chords_.push_back(Chord{start_c_[k], end_c_[k], ki});
      } else {
        chords_.push_back(Chord{start_c_[k], exit_c_[k][0], ki});
        for (int i = 0; i + 1 < L; ++i)
          chords_.push_back(Chord{reentry_c_[k][static_cast<size_t>(i)],
                                  exit_c_[k][static_cast<size_t>(i + 1)], ki});
        chords_.push_back(
            Chord{reentry_c_[k][static_cast<size_t>(L - 1)], end_c_[k], ki});
      }
    }
  }

  bool between_pos(int x, int lo, int hi) const {
    int span = ((hi - lo) % ncoords_ + ncoords_) % ncoords_;
    int off = ((x - lo) % ncoords_ + ncoords_) % ncoords_;
    return off > 0 && off < span;
  }
  bool interleaved(const Chord& a, const Chord& b) const {
    return between_pos(b.from, a.from, a.to) != between_pos(b.to, a.from, a.to);
  }
};

// smallest rotation step under which the cyclic word is invariant
int cyclic_period(const std::vector<Letter>& w) {
  const int n = static_cast<int>(w.size());
  for (int p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool eq = true;
    for (int i = 0; eq && i < n; ++i)
      if (w[static_cast<size_t>(i)] != w[static_cast<size_t>((i + p) % n)])
        eq = false;
    if (eq) return p;
  }
  return n;
}

DrawnItem root_of(const DrawnItem& a, int period) {
  DrawnItem r = a;
  r.letters.assign(a.letters.begin(), a.letters.begin() + period);
  return r;
}

long long settle_self(const SurfaceModel& m, const DrawnItem& prim,
                      int effort) {
  State st(m, {prim});
  st.minimize(effort);
  return st.between(0, 0);
}

long long factorial_capped(size_t n, long long cap) {
  long long f = 1;
  for (size_t i = 2; i <= n; ++i) {
    f *= static_cast<long long>(i);
    if (f > cap) return cap + 1;
  }
  return f;
}

std::optional<long long> exhaustive(const SurfaceModel& m,
                                    std::vector<DrawnItem> items, int a, int b,
                                    long long budget) {
  State st(m, std::move(items));
  long long total = 1;
  for (auto& v : st.cut_order()) {
    total *= factorial_capped(v.size(), budget);
    if (total > budget) return std::nullopt;
  }
  for (auto& v : st.side_order()) {
    total *= factorial_capped(v.size(), budget);
    if (total > budget) return std::nullopt;
  }

  // canonical starting permutation everywhere
  auto pass_key = [](const Pass& p) { return std::make_pair(p.item, p.pos); };
  auto tok_key = [](const Tok& t) { return std::make_pair(t.item, t.is_end); };
  for (auto& v : st.cut_order())
    std::sort(v.begin(), v.end(), [&](const Pass& x, const Pass& y) {
      return pass_key(x) < pass_key(y);
    });
  for (auto& v : st.side_order())
    std::sort(v.begin(), v.end(), [&](const Tok& x, const Tok& y) {
      return tok_key(x) < tok_key(y);
    });

  long long best = -1;
  // odometer over permutations of every cut and side
  while (true) {
    st.recount();
    long long c = st.between(a, b);
    if (best < 0 || c < best) best = c;
    // advance
    bool advanced = false;
    for (auto& v : st.cut_order()) {
      if (std::next_permutation(v.begin(), v.end(),
                                [&](const Pass& x, const Pass& y) {
                                  return pass_key(x) < pass_key(y);
                                })) {
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      for (auto& v : st.side_order()) {
        if (std::next_permutation(v.begin(), v.end(),
                                  [&](const Tok& x, const Tok& y) {
                                    return tok_key(x) < tok_key(y);
                                  })) {
          advanced = true;
          break;
        }
      }
    }
    if (!advanced) break;
  }
  return best;
}

}  // namespace

long long min_pair(const SurfaceModel& m, const DrawnItem& a,
                   const DrawnItem& b, int effort) {
  DrawnItem ra = a, rb = b;
  long long ka = 1, kb = 1;
  if (!a.is_arc && !a.letters.empty()) {
    int p = cyclic_period(a.letters);
    ka = static_cast<long long>(a.letters.size()) / p;
    ra = root_of(a, p);
  }
  if (!b.is_arc && !b.letters.empty()) {
    int p = cyclic_period(b.letters);
    kb = static_cast<long long>(b.letters.size()) / p;
    rb = root_of(b, p);
  }
  if (!ra.is_arc && !rb.is_arc && !ra.letters.empty() &&
      canonical_cyclic(ra.letters) == canonical_cyclic(rb.letters))
    // parallel copies of one root: twice its self-crossings per copy pair
    return ka * kb * 2 * settle_self(m, ra, effort);
  State st(m, {ra, rb});
  st.minimize(effort);
  return ka * kb * st.between(0, 1);
}

long long min_self(const SurfaceModel& m, const DrawnItem& a, int effort) {
  if (a.is_arc || a.letters.empty()) {
    State st(m, {a});
    st.minimize(effort);
    return st.between(0, 0);
  }
  const int p = cyclic_period(a.letters);
  const long long k = static_cast<long long>(a.letters.size()) / p;
  return k * k * settle_self(m, root_of(a, p), effort) + (k - 1);
}

std::optional<long long> exhaustive_pair(const SurfaceModel& m,
                                         const DrawnItem& a,
                                         const DrawnItem& b, long long budget) {
  return exhaustive(m, {a, b}, 0, 1, budget);
}

std::optional<long long> exhaustive_self(const SurfaceModel& m,
                                         const DrawnItem& a, long long budget) {
  return exhaustive(m, {a}, 0, 0, budget);
}

}  // namespace obt::oracle
