#include <doctest.h>

#include <string>
#include <vector>

#include "obtwist/catalog.hpp"
#include "obtwist/curves.hpp"
#include "obtwist/fdtc.hpp"
#include "obtwist/mapping.hpp"
#include "obtwist/openbook.hpp"

using namespace obt;

namespace {

OpenBook ob(const std::string& surface, const std::string& word) {
  return make_open_book(catalog(), surface, TwistWord{surface, parse_word_text(word)});
}

std::vector<Syllable> syl(const std::string& text) { return parse_word_text(text); }

}  // namespace

TEST_CASE("open book construction checks the word") {
  OpenBook b = ob("S1_2", "a*a*b^-1");
  CHECK(b.phi.syllables == syl("a^2*b^-1"));  // normalized on entry
  try {
    static_cast<void>(ob("S1_2", "a*x"));
    FAIL("bad generator accepted");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::UnknownGenerator);
  }
}

TEST_CASE("capping a pants boundary lands on the annulus") {
  for (int n = 1; n <= 3; ++n) {
    OpenBook capped =
        cap_off(catalog(), ob("P", "B2^" + std::to_string(n) + "*B1^-2*B3"), "B1");
    CHECK(capped.surface == "A");
    CHECK(capped.phi.syllables == syl("C^" + std::to_string(n + 1)));
  }
}

TEST_CASE("capping the two-boundary page lands on the one-boundary page") {
  OpenBook trivial = cap_off(catalog(), ob("S1_2", "B1^5"), "B1");
  CHECK(trivial.surface == "S1_1");
  CHECK(trivial.phi.syllables.empty());

  OpenBook csq = cap_off(catalog(), ob("S1_2", "c^2"), "B1");
  CHECK(csq.surface == "S1_1");
  CHECK(csq.phi.syllables == syl("a^2"));

  OpenBook other = cap_off(catalog(), ob("S1_2", "B2^3*b^-1"), "B2");
  CHECK(other.surface == "S1_1");
  CHECK(other.phi.syllables == syl("b^-1"));
}

TEST_CASE("capping errors") {
  try {
    static_cast<void>(cap_off(catalog(), ob("A", "C"), "B1"));
    FAIL("capped past the catalog");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::NotInCatalog);
  }
  try {
    static_cast<void>(cap_off(catalog(), ob("S1_1", "a"), "d"));
    FAIL("closed the page");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::CannotCapLast);
  }
  CHECK_THROWS_AS(static_cast<void>(cap_off(catalog(), ob("S1_2", "a"), "B7")),
                  Error);
}

TEST_CASE("twists along the capped boundary disappear wherever they sit") {
  OpenBook base = cap_off(catalog(), ob("S1_2", "a*b^-1*c"), "B1");
  for (const std::string& v :
       {"B1*a*b^-1*c", "a*B1*b^-1*c", "a*b^-1*B1^-1*c", "a*b^-1*c*B1^2"}) {
    OpenBook capped = cap_off(catalog(), ob("S1_2", v), "B1");
    CHECK(capped.surface == base.surface);
    CHECK(capped.phi.syllables == base.phi.syllables);
  }
}

TEST_CASE("branched covers multiply the monodromy") {
  OpenBook b = ob("S1_2", "c*b^-1");
  CHECK(branched_cover(catalog(), b, 1).phi.syllables == b.phi.syllables);

  OpenBook two_three = branched_cover(catalog(), branched_cover(catalog(), b, 2), 3);
  OpenBook six = branched_cover(catalog(), b, 6);
  CHECK(two_three.phi.syllables == six.phi.syllables);

  OpenBook annulus_cover = branched_cover(catalog(), ob("A", "C^2"), 3);
  FdtcResult r = fdtc(catalog(), "A", annulus_cover.phi, "B1");
  REQUIRE(r.resolved);
  CHECK(r.value == Rational(6));

  CHECK_THROWS_AS(static_cast<void>(branched_cover(catalog(), b, 0)), Error);
}

TEST_CASE("capping and covering commute") {
  OpenBook b = ob("S1_2", "c*b^-1");
  OpenBook cover_then_cap =
      cap_off(catalog(), branched_cover(catalog(), b, 2), "B1");
  OpenBook cap_then_cover =
      branched_cover(catalog(), cap_off(catalog(), b, "B1"), 2);
  CHECK(cover_then_cap.surface == cap_then_cover.surface);
  CHECK(cover_then_cap.phi.syllables == cap_then_cover.phi.syllables);
}

TEST_CASE("capped words only use curves of the smaller page") {
  OpenBook capped = cap_off(catalog(), ob("S1_2", "a*b^-1*c*B2^2*B1^-1"), "B1");
  const SurfaceModel& target = catalog().get(capped.surface);
  for (const Syllable& s : capped.phi.syllables) CHECK(target.has_curve(s.gen));
  CHECK_NOTHROW(check_word(target, capped.phi));
}

TEST_CASE("sign-split certification accepts the three-chain word") {
  PennerReport r = penner_check(catalog(), "S1_2",
                                TwistWord{"S1_2", syl("a*b^-1*c")}, {"a", "c"}, {"b"});
  CHECK(r.signs_ok);
  CHECK(r.disjoint_ok);
  CHECK(r.filling_ok);
  CHECK(r.both_nonempty_used);
  CHECK(r.certified);
  CHECK(r.reason.empty());
  CHECK(r.reduced == syl("a*b^-1*c"));

  // twists along disjoint curves commute, so the reordered word certifies too
  PennerReport r2 = penner_check(catalog(), "S1_2",
                                 TwistWord{"S1_2", syl("c*a*b^-1")}, {"a", "c"}, {"b"});
  CHECK(r2.certified);

  // boundary twists are stripped before the checks
  PennerReport r3 = penner_check(catalog(), "S1_2",
                                 TwistWord{"S1_2", syl("B1^-2*a*B2*b^-1*c")},
                                 {"a", "c"}, {"b"});
  CHECK(r3.certified);
  CHECK(r3.reduced == syl("a*b^-1*c"));
}

TEST_CASE("sign-split certification rejects with the right first reason") {
  PennerReport filling = penner_check(catalog(), "S1_2",
                                      TwistWord{"S1_2", syl("a^3")}, {"a"}, {});
  CHECK_FALSE(filling.certified);
  CHECK(filling.reason == "filling");
  CHECK(filling.signs_ok);
  CHECK(filling.disjoint_ok);
  CHECK_FALSE(filling.filling_ok);
  CHECK_FALSE(filling.both_nonempty_used);

  PennerReport signs = penner_check(catalog(), "S1_2",
                                    TwistWord{"S1_2", syl("a*b")}, {"a"}, {"b"});
  CHECK_FALSE(signs.certified);
  CHECK(signs.reason == "signs");

  // the full fifteen-syllable word reduces to a*b^-1*c*dp^-1; without dp in
  // the negative family the sign check fails, with it the word certifies
  TwistWord psi{"S1_2", syl("a*b^-1*c*(a*b)^-6")};
  PennerReport no_dp = penner_check(catalog(), "S1_2", psi, {"a", "c"}, {"b"});
  CHECK_FALSE(no_dp.certified);
  CHECK(no_dp.reason == "signs");
  CHECK(no_dp.reduced == syl("a*b^-1*c*dp^-1"));

  PennerReport with_dp = penner_check(catalog(), "S1_2", psi, {"a", "c"}, {"b", "dp"});
  CHECK(with_dp.certified);

  // curves meeting inside one family fail the disjointness check
  PennerReport cross = penner_check(catalog(), "S1_2",
                                    TwistWord{"S1_2", syl("a*b")}, {"a", "b"}, {});
  CHECK_FALSE(cross.certified);
  CHECK(cross.reason == "disjoint");
}

TEST_CASE("the certified word acts nontrivially") {
  const Catalog& cat = catalog();
  const SurfaceModel& m = cat.get("S1_2");
  TwistWord psi{"S1_2", syl("a*b^-1*c*(a*b)^-6")};
  CurveWord image = apply_class(m, cat.handedness, psi, m.curve("b"));
  CHECK(pair_crossings(m, as_item(m, image), as_item(m, m.curve("b"))) > 0);
}
