#include <catch2/catch_amalgamated.hpp>

#include "core_algebra.hpp"
#include "finite_table.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace gyro;
using namespace gyro::test;

TEST_CASE("gyration is trivial in a group-as-gyrogroup") {
  auto g = from_group(4, cyclic_table(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        CHECK(gyr_apply(g, a, b, c) == c);
        CHECK(gyr_formula(g, a, b, c) == c);
      }
}

TEST_CASE("gyr[a,0] and gyr[0,b] are the identity map") {
  for (const auto& name : {"z4.tbl", "g8.tbl"}) {
    auto g = load_gyrogroup(fixture(name));
    for (int a = 0; a < g.n(); ++a)
      for (int c = 0; c < g.n(); ++c) {
        CHECK(gyr_apply(g, a, g.zero(), c) == c);
        CHECK(gyr_apply(g, g.zero(), a, c) == c);
      }
  }
}

TEST_CASE("coaddition and cosubtraction on the cyclic group") {
  auto g = from_group(4, cyclic_table(4));
  CHECK(coadd(g, 1, 2) == 3);  // coaddition equals addition when gyr = id
  CHECK(cosub(g, 1, 3) == 2);  // ordinary subtraction mod 4
}

TEST_CASE("coadd and cosub edge identities hold in every fixture") {
  for (const auto& name :
       {"z4.tbl", "klein4.tbl", "z6.tbl", "trivial.tbl", "g8.tbl"}) {
    auto g = load_gyrogroup(fixture(name));
    for (int a = 0; a < g.n(); ++a) {
      CHECK(coadd(g, a, g.zero()) == a);
      CHECK(coadd(g, g.zero(), a) == a);
      CHECK(cosub(g, a, a) == g.zero());
      CHECK(cosub(g, a, g.zero()) == a);
    }
  }
}

TEST_CASE("coadd agrees with its closed form on all pairs of all fixtures") {
  for (const auto& name :
       {"z4.tbl", "klein4.tbl", "z6.tbl", "trivial.tbl", "g8.tbl"}) {
    auto g = load_gyrogroup(fixture(name));
    for (int a = 0; a < g.n(); ++a)
      for (int b = 0; b < g.n(); ++b) {
        CHECK(coadd(g, a, b) == coadd_alt(g, a, b));
        CHECK(cosub(g, a, b) == coadd(g, a, g.neg(b)));
      }
  }
}

TEST_CASE("exhaustive identity suite passes on every fixture") {
  for (const auto& name :
       {"z4.tbl", "klein4.tbl", "z6.tbl", "trivial.tbl", "g8.tbl"}) {
    INFO(name);
    auto g = load_gyrogroup(fixture(name));
    IdentityReport rep = identity_suite_exhaustive(g);
    CHECK(rep.all_passed());
    for (const auto& c : rep.checks) {
      INFO(c.label);
      CHECK(c.passed);
      CHECK(c.checks > 0);
      CHECK(c.max_residual == 0.0);
    }
  }
}

TEST_CASE("exhaustive identity suite passes on a non-abelian group") {
  auto g = from_group(6, sym3_table());
  CHECK(identity_suite_exhaustive(g).all_passed());
}

TEST_CASE("suite reports the expected check labels") {
  auto g = load_gyrogroup(fixture("trivial.tbl"));
  IdentityReport rep = identity_suite_exhaustive(g);
  for (const char* label :
       {"G1", "G2", "G4", "left-gyroassociativity", "right-gyroassociativity",
        "left-loop", "right-loop", "left-cancellation",
        "coaddition-right-cancellation", "cosubtraction-right-cancellation",
        "gyration-formula", "gyrosum-inversion", "gyration-preserves-negation",
        "inversive-symmetry", "cogyroautomorphic-inverse", "even-symmetry",
        "trivial-gyration", "gyration-automorphism"}) {
    INFO(label);
    CHECK(rep.find(label) != nullptr);
  }
  CHECK(rep.checks.size() == 18);
}

TEST_CASE("suite on a corrupted table fails with concrete witnesses") {
  auto bad = cyclic_table(4);
  bad[1 * 4 + 1] = 3;  // cell (1,1): 2 -> 3
  RawTable raw(4, bad);
  IdentityReport rep = identity_suite_exhaustive(raw);
  REQUIRE_FALSE(rep.all_passed());

  const auto* g1 = rep.find("G1");
  const auto* cancel = rep.find("left-cancellation");
  REQUIRE(g1 != nullptr);
  REQUIRE(cancel != nullptr);
  CHECK((!g1->passed || !cancel->passed));

  // every failing check carries at least one witness
  for (const auto& c : rep.checks)
    if (!c.passed) {
      INFO(c.label);
      CHECK_FALSE(c.witnesses.empty());
      CHECK(c.failures > 0);
    }
}

TEST_CASE("left translations are injective in valid fixtures") {
  for (const auto& name : {"z4.tbl", "g8.tbl"}) {
    auto g = load_gyrogroup(fixture(name));
    for (int a = 0; a < g.n(); ++a)
      for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y)
          CHECK(g.add(a, x) != g.add(a, y));
  }
}

TEST_CASE("cached gyration table matches the defining formula") {
  auto g = load_gyrogroup(fixture("g8.tbl"));
  for (int a = 0; a < g.n(); ++a)
    for (int b = 0; b < g.n(); ++b)
      for (int c = 0; c < g.n(); ++c)
        CHECK(g.gyr(a, b, c) == gyr_formula(g, a, b, c));
}
