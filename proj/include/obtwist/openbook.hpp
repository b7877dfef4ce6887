#pragma once

#include <string>
#include <vector>

#include "obtwist/catalog.hpp"
#include "obtwist/words.hpp"

namespace obt {

struct OpenBook {
  std::string surface;
  TwistWord phi;
};

OpenBook make_open_book(const Catalog& cat, const std::string& surface,
                        const TwistWord& phi);

// Cap the named boundary with a disk; the monodromy is pushed through the
// catalog's capping tables. CannotCapLast when the result would be closed,
// NotInCatalog when the smaller surface is not modeled.
OpenBook cap_off(const Catalog& cat, const OpenBook& ob,
                 const std::string& boundary);

// n-fold cyclic cover branched over the binding: same page, monodromy phi^n.
OpenBook branched_cover(const Catalog& cat, const OpenBook& ob, long long n);

struct PennerReport {
  bool signs_ok = false;     // word = positive twists on plus, negative on minus
  bool disjoint_ok = false;  // curves pairwise disjoint within each family
  bool filling_ok = false;   // complement of the union: disks + collar annuli
  bool both_nonempty_used = false;  // both families nonempty, every curve used
  bool certified = false;           // all four
  std::string reason;  // empty when certified, else first failing check id:
                       // "signs" | "disjoint" | "filling" | "usage"
  std::vector<Syllable> reduced;  // word after rewrites and boundary stripping
};

// Certify the class as pseudo-Anosov by Penner's criterion against the given
// plus/minus curve families.  Boundary-parallel syllables are stripped first
// (they do not change the free isotopy class).  All four checks always run;
// the reason names the first failure in the fixed order.
PennerReport penner_check(const Catalog& cat, const std::string& surface,
                          const TwistWord& w,
                          const std::vector<std::string>& plus,
                          const std::vector<std::string>& minus);

}  // namespace obt
