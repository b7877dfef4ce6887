#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "obtwist/catalog.hpp"
#include "obtwist/curves.hpp"
#include "obtwist/mapping.hpp"
#include "tracer.hpp"

using namespace obt;

namespace {

std::vector<std::pair<std::string, DrawnItem>> catalog_items(const SurfaceModel& m) {
  std::vector<std::pair<std::string, DrawnItem>> out;
  for (const auto& [name, cw] : m.generators) out.emplace_back(name, as_item(m, cw));
  for (const auto& [name, cw] : m.aux_curves) out.emplace_back(name, as_item(m, cw));
  for (const auto& [label, arc] : m.test_arcs)
    out.emplace_back("arc:" + label, as_item(m, arc));
  return out;
}

CurveWord random_curve(const SurfaceModel& m, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> cut(1, m.num_cuts());
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> w;
  while (static_cast<int>(w.size()) < len) {
    Letter l = cut(rng) * (sign(rng) ? 1 : -1);
    if (!w.empty() && w.back() == -l) continue;
    w.push_back(l);
  }
  return CurveWord{m.id, cyclic_reduce(w)};
}

TwistWord random_twist_word(const SurfaceModel& m, std::mt19937& rng, int syllables) {
  std::uniform_int_distribution<int> gen(0, static_cast<int>(m.generator_order.size()) - 1);
  std::uniform_int_distribution<int> e(-2, 2);
  TwistWord w;
  w.surface = m.id;
  for (int i = 0; i < syllables; ++i) {
    int k = e(rng);
    if (k == 0) k = 1;
    w.syllables.push_back({m.generator_order[static_cast<size_t>(gen(rng))], k});
  }
  w.syllables = normalize_syllables(std::move(w.syllables));
  return w;
}

}  // namespace

TEST_CASE("crossing counts reproduce the intersection tables") {
  for (const char* id : {"P", "S1_1", "S1_2"}) {
    const SurfaceModel& m = catalog().get(id);
    for (const auto& [key, want] : m.intersection_table) {
      long long got = pair_crossings(m, as_item(m, m.curve(key.first)),
                                     as_item(m, m.curve(key.second)));
      CHECK_MESSAGE(got == want, id, " ", key.first, ",", key.second);
    }
  }
}

TEST_CASE("catalog curves are embedded") {
  for (const SurfaceModel& m : catalog().surfaces) {
    for (const auto& [name, cw] : m.generators)
      CHECK_MESSAGE(self_crossings(m, as_item(m, cw)) == 0, m.id, " ", name);
    for (const auto& [name, cw] : m.aux_curves)
      CHECK_MESSAGE(self_crossings(m, as_item(m, cw)) == 0, m.id, " ", name);
  }
}

TEST_CASE("twisting changes crossing numbers the predicted way") {
  const Catalog& cat = catalog();
  const SurfaceModel& m = cat.get("S1_2");
  const CurveWord& a = m.curve("a");
  const CurveWord& b = m.curve("b");

  CurveWord ta = apply_class(m, cat.handedness, TwistWord{"S1_2", {{"b", 1}}}, a);
  CHECK(pair_crossings(m, as_item(m, ta), as_item(m, a)) == 1);
  CHECK(pair_crossings(m, as_item(m, ta), as_item(m, b)) == 1);

  CurveWord t3a = apply_class(m, cat.handedness, TwistWord{"S1_2", {{"b", 3}}}, a);
  CHECK(pair_crossings(m, as_item(m, t3a), as_item(m, a)) == 3);
  CHECK(pair_crossings(m, as_item(m, t3a), as_item(m, b)) == 1);
}

TEST_CASE("crossing numbers are mapping-class invariants") {
  const Catalog& cat = catalog();
  const SurfaceModel& m = cat.get("S1_2");
  std::mt19937 rng(23);
  std::vector<std::string> names = {"a", "b", "c", "dp"};
  for (int trial = 0; trial < 12; ++trial) {
    TwistWord w = random_twist_word(m, rng, 1 + trial % 4);
    std::vector<CurveWord> images;
    for (const std::string& n : names)
      images.push_back(apply_class(m, cat.handedness, w, m.curve(n)));
    for (size_t i = 0; i < names.size(); ++i)
      for (size_t j = i; j < names.size(); ++j) {
        long long before = (i == j)
            ? self_crossings(m, as_item(m, m.curve(names[i])))
            : pair_crossings(m, as_item(m, m.curve(names[i])),
                             as_item(m, m.curve(names[j])));
        long long after = (i == j)
            ? self_crossings(m, as_item(m, images[i]))
            : pair_crossings(m, as_item(m, images[i]), as_item(m, images[j]));
        CHECK_MESSAGE(after == before, "word ", print_syllables(w.syllables),
                      " on ", names[i], ",", names[j]);
      }
  }
}

TEST_CASE("twists are invertible on curves") {
  const Catalog& cat = catalog();
  const SurfaceModel& m = cat.get("S1_2");
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    TwistWord w = random_twist_word(m, rng, 1 + trial % 6);
    TwistWord winv{m.id, inverse_syllables(w.syllables)};
    CurveWord c = random_curve(m, rng, 1 + trial % 5);
    if (c.letters.empty()) continue;
    CurveWord round = apply_class(m, cat.handedness, winv,
                                  apply_class(m, cat.handedness, w, c));
    CHECK(canonical_cyclic(round.letters) == canonical_cyclic(c.letters));
  }
}

TEST_CASE("engine counts match the independent tracer on catalog items") {
  for (const SurfaceModel& m : catalog().surfaces) {
    auto items = catalog_items(m);
    for (size_t i = 0; i < items.size(); ++i) {
      CHECK_MESSAGE(self_crossings(m, items[i].second) ==
                        oracle::min_self(m, items[i].second),
                    m.id, " self ", items[i].first);
      for (size_t j = i + 1; j < items.size(); ++j) {
        long long engine = pair_crossings(m, items[i].second, items[j].second);
        long long traced = oracle::min_pair(m, items[i].second, items[j].second);
        CHECK_MESSAGE(engine == traced, m.id, " ", items[i].first, " vs ",
                      items[j].first);
        if (auto ex = oracle::exhaustive_pair(m, items[i].second, items[j].second))
          CHECK_MESSAGE(engine == *ex, m.id, " exhaustive ", items[i].first,
                        " vs ", items[j].first);
      }
    }
  }
}

TEST_CASE("engine counts match the tracer on random words") {
  std::mt19937 rng(47);
  for (const SurfaceModel& m : catalog().surfaces) {
    for (int trial = 0; trial < 40; ++trial) {
      CurveWord x = random_curve(m, rng, 1 + trial % 5);
      CurveWord y = random_curve(m, rng, 1 + (trial * 7) % 5);
      if (x.letters.empty() || y.letters.empty()) continue;
      DrawnItem ix = as_item(m, x), iy = as_item(m, y);
      CHECK_MESSAGE(pair_crossings(m, ix, iy) == oracle::min_pair(m, ix, iy),
                    m.id, " ", m.print_letters(x.letters), " vs ",
                    m.print_letters(y.letters));
      CHECK(self_crossings(m, ix) == oracle::min_self(m, ix));
    }
  }
}

TEST_CASE("collar winding bookkeeping") {
  const Catalog& cat = catalog();
  for (const SurfaceModel& m : cat.surfaces) {
    for (const std::string& label : m.boundary_labels) {
      const ArcWord& arc = m.test_arcs.at(label);
      CHECK(collar_intersection(m, arc, arc, label) == 0);
      const std::string& parallel = m.boundary_parallel.at(label).front();
      ArcWord image = apply_class(m, cat.handedness,
                                  TwistWord{m.id, {{parallel, 2}}}, arc);
      CHECK_MESSAGE(collar_intersection(m, image, arc, label) == 2,
                    m.id, " at ", label);
    }
  }
}

TEST_CASE("boundary-parallel arc detection") {
  const SurfaceModel& m = catalog().get("S1_1");
  const BoundaryInfo& d = m.boundary("d");
  std::vector<Letter> pos = d.cycle_from_mark(0);
  ArcWord hug;  // slides along the boundary from mark 0 to mark 1
  hug.surface = m.id;
  hug.letters = {pos[0], pos[1]};
  hug.start = {0, 0};
  hug.end = {0, 1};
  CHECK(is_boundary_parallel(m, hug));

  ArcWord full = hug;  // all the way around, back to mark 0
  full.letters = pos;
  full.end = {0, 0};
  CHECK(is_boundary_parallel(m, full));

  CHECK_FALSE(is_boundary_parallel(m, m.test_arcs.at("d")));
}
