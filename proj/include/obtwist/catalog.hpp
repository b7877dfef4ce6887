#pragma once

#include <string>
#include <vector>

#include "obtwist/surface.hpp"

namespace obt {

// The fixed library of supported surfaces, loaded from embedded data and
// validated (structure, embeddedness, intersection table, boundary
// parallelism, twist-side calibration) before first use.
struct Catalog {
  std::vector<SurfaceModel> surfaces;
  // Global side the twist splice pushes to, fixed so that a full positive
  // twist about any boundary advances its spanning arc by exactly +1 turn.
  int handedness = +1;

  bool has(const std::string& id) const;
  const SurfaceModel& get(const std::string& id) const;  // UnknownSurface
};

// Parse, derive and validate a catalog from raw data-file texts.
Catalog build_catalog_from_texts(const std::vector<std::string>& texts);

// Engine-backed checks over a parsed catalog; fixes `handedness`.
// Throws CatalogCorrupt on any violation.
void validate_catalog(Catalog& cat);

// The embedded default catalog (built and validated once per process).
const Catalog& catalog();

}  // namespace obt
