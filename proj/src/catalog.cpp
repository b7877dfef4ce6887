#include "obtwist/catalog.hpp"

#include <set>

#include "catalog_data.hpp"
#include "obtwist/curves.hpp"
#include "obtwist/errors.hpp"

namespace obt {
namespace {

[[noreturn]] void corrupt(const std::string& why) {
  throw Error(ErrorCode::CatalogCorrupt, why);
}

void validate_surface(const SurfaceModel& m) {
  auto all_curves = [&]() {
    std::vector<std::pair<std::string, const CurveWord*>> v;
    for (const auto& [n, c] : m.generators) v.emplace_back(n, &c);
    for (const auto& [n, c] : m.aux_curves) v.emplace_back(n, &c);
    return v;
  }();

  for (const auto& [name, cw] : all_curves) {
    if (self_crossings(m, as_item(m, *cw)) != 0)
      corrupt(m.id + ": curve " + name + " is not embedded");
  }

  for (const auto& [key, want] : m.intersection_table) {
    long long got = pair_crossings(m, as_item(m, m.curve(key.first)),
                                   as_item(m, m.curve(key.second)));
    if (got != want)
      corrupt(m.id + ": crossing count " + key.first + "," + key.second +
              " is " + std::to_string(got) + ", table says " +
              std::to_string(want));
  }

  // Parallelism declarations must match the traced boundary cycles, and only
  // the declared curves may be parallel to a boundary.
  std::set<std::string> declared_parallel;
  for (const auto& [label, gens] : m.boundary_parallel) {
    const BoundaryInfo& bi = m.boundary(label);
    std::vector<Letter> cyc = canonical_cyclic(bi.cycle);
    for (const std::string& g : gens) {
      declared_parallel.insert(g);
      if (canonical_cyclic(m.curve(g).letters) != cyc)
        corrupt(m.id + ": " + g + " is declared parallel to " + label +
                " but is not");
    }
  }
  for (const auto& [name, cw] : all_curves) {
    if (declared_parallel.count(name)) continue;
    for (const BoundaryInfo& bi : m.boundaries)
      if (canonical_cyclic(cw->letters) == canonical_cyclic(bi.cycle))
        corrupt(m.id + ": curve " + name + " is parallel to " + bi.label +
                " but not declared so");
  }

  for (const auto& [label, arc] : m.test_arcs) {
    if (self_crossings(m, as_item(m, arc)) != 0)
      corrupt(m.id + ": spanning arc of " + label + " is not embedded");
    if (is_boundary_parallel(m, arc))
      corrupt(m.id + ": spanning arc of " + label + " can slide into the boundary");
  }
}

// The twist-side convention is a global binary choice.  A full positive twist
// about a boundary must advance that boundary's spanning arc by one positive
// turn; measuring with h=+1 reveals which side the splice actually pushed to.
int surface_handedness(const SurfaceModel& m) {
  int h = 0;
  for (const auto& [label, gens] : m.boundary_parallel) {
    if (gens.empty()) corrupt(m.id + ": no curve parallel to " + label);
    const ArcWord& arc = m.test_arcs.at(label);
    TwistTable t = build_twist_table(m, gens.front());
    DrawnItem im = as_item(m, arc);
    im.letters = apply_twist(m, t, im, 1, +1);
    ArcWord image = arc;
    image.letters = im.letters;
    long long turn = collar_intersection(m, image, arc, label);
    if (turn != 1 && turn != -1)
      corrupt(m.id + ": boundary twist at " + label + " advanced its arc by " +
              std::to_string(turn) + " turns");
    int hb = turn > 0 ? +1 : -1;
    if (h == 0) h = hb;
    if (h != hb) corrupt(m.id + ": twist sides disagree between boundaries");
  }
  return h;
}

}  // namespace

bool Catalog::has(const std::string& id) const {
  for (const SurfaceModel& m : surfaces)
    if (m.id == id) return true;
  return false;
}

const SurfaceModel& Catalog::get(const std::string& id) const {
  for (const SurfaceModel& m : surfaces)
    if (m.id == id) return m;
  throw Error(ErrorCode::UnknownSurface, "unknown surface: " + id);
}

void validate_catalog(Catalog& cat) {
  std::set<std::string> ids;
  for (const SurfaceModel& m : cat.surfaces) {
    if (!ids.insert(m.id).second) corrupt("duplicate surface id: " + m.id);
  }
  for (const SurfaceModel& m : cat.surfaces) {
    validate_surface(m);
    for (const auto& [label, spec] : m.caps) {
      if (spec.kind != CapTargetKind::Surface) continue;
      const CappingTable& ct = spec.table;
      if (!cat.has(ct.target))
        corrupt(m.id + ": cap of " + label + " targets unknown surface " +
                ct.target);
      const SurfaceModel& tgt = cat.get(ct.target);
      for (const auto& [gen, img] : ct.generator_images) {
        if (img.kind == CapImageKind::Generator && !tgt.has_curve(img.target_gen))
          corrupt(m.id + ": cap image of " + gen + " names unknown curve " +
                  img.target_gen + " on " + tgt.id);
        if (img.kind == CapImageKind::BoundaryParallel) {
          auto it = tgt.boundary_parallel.find(img.target_boundary);
          if (it == tgt.boundary_parallel.end() || it->second.empty())
            corrupt(m.id + ": cap image of " + gen +
                    " needs a curve parallel to " + img.target_boundary +
                    " on " + tgt.id);
        }
      }
      for (const auto& [from, to] : ct.boundary_map) {
        (void)from;
        bool known = false;
        for (const std::string& bl : tgt.boundary_labels) known |= (bl == to);
        if (!known)
          corrupt(m.id + ": cap boundary map targets unknown boundary " + to);
      }
    }
  }
  int h = 0;
  for (const SurfaceModel& m : cat.surfaces) {
    int hm = surface_handedness(m);
    if (hm == 0) continue;
    if (h == 0) h = hm;
    if (h != hm) corrupt("twist sides disagree between surfaces");
  }
  if (h == 0) corrupt("catalog fixes no twist side");
  cat.handedness = h;
}

Catalog build_catalog_from_texts(const std::vector<std::string>& texts) {
  Catalog cat;
  for (const std::string& t : texts) cat.surfaces.push_back(parse_surface_text(t));
  validate_catalog(cat);
  return cat;
}

const Catalog& catalog() {
  static const Catalog cat = build_catalog_from_texts(
      {embedded::kSurfaceA, embedded::kSurfaceP, embedded::kSurfaceS1_1,
       embedded::kSurfaceS1_2});
  return cat;
}

}  // namespace obt
