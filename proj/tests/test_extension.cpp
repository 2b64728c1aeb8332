#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "desire/coherence.hpp"
#include "desire/extension.hpp"
#include "desire/things.hpp"

using namespace desire;

namespace {

ClosurePtr checked(ClosurePtr cl) {
  REQUIRE(cl->check_laws().ok());
  return cl;
}

ClosurePtr sticky2() {
  Universe u = Universe::opaque({"a", "b"});
  return checked(ClosureOperator::table(
      u, {ThingSet(0b00), ThingSet(0b11), ThingSet(0b10), ThingSet(0b11)}));
}

ClosurePtr fuse3() {
  std::vector<ThingSet> images(8);
  for (std::uint32_t m = 0; m < 8; ++m) images[m] = ThingSet(m);
  images[0b011] = ThingSet(0b111);
  return checked(
      ClosureOperator::table(Universe::opaque({"a", "b", "c"}), images));
}

// Oracle: the least coherent superset is the intersection of all of them.
struct SdtOracle {
  bool coherent_superset_exists = false;
  ThingSet intersection = ThingSet::full(16);
};

SdtOracle sdt_oracle(ThingSet base, const Assessment& a,
                     const ClosureOperator& cl) {
  SdtOracle out;
  const int n = cl.universe().size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ThingSet d(mask);
    if (!base.subset_of(d)) continue;
    if (!check_sdt(d, a, cl).ok()) continue;
    if (!out.coherent_superset_exists) {
      out.coherent_superset_exists = true;
      out.intersection = d;
    } else {
      out.intersection = out.intersection & d;
    }
  }
  return out;
}

struct SdsOracle {
  bool coherent_superset_exists = false;
  Family intersection;
};

SdsOracle sds_oracle(const Family& base, const Assessment& a,
                     const ClosureOperator& cl) {
  SdsOracle out;
  // Casting a wide net: every coherent family over the universe.
  for (const Family& k : enumerate_coherent_sds(a, cl)) {
    bool superset = true;
    for (ThingSet s : base.sets()) {
      if (!k.contains(s)) {
        superset = false;
        break;
      }
    }
    if (!superset) continue;
    if (!out.coherent_superset_exists) {
      out.coherent_superset_exists = true;
      out.intersection = k;
    } else {
      std::vector<ThingSet> kept;
      for (ThingSet s : out.intersection.sets()) {
        if (k.contains(s)) kept.push_back(s);
      }
      out.intersection = Family(std::move(kept));
    }
  }
  return out;
}

void check_sdt_against_oracle(const ClosureOperator& cl, const Assessment& a) {
  const int n = cl.universe().size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ThingSet base(mask);
    SdtExtension ext = sdt_natural_extension(base, a, cl);
    SdtOracle oracle = sdt_oracle(base, a, cl);
    if (oracle.coherent_superset_exists) {
      REQUIRE(ext.status == ExtensionStatus::Extended);
      REQUIRE(ext.result == oracle.intersection);
    } else {
      REQUIRE(ext.status == ExtensionStatus::Incoherent);
    }
  }
}

void check_sds_base_against_oracle(const Family& base, const Assessment& a,
                                   const ClosureOperator& cl) {
  SdsExtension full = sds_natural_extension(base, a, cl);
  SdsOracle oracle = sds_oracle(base, a, cl);
  if (oracle.coherent_superset_exists) {
    REQUIRE(full.status == ExtensionStatus::Extended);
    REQUIRE(full.result == oracle.intersection);
  } else {
    REQUIRE(full.status == ExtensionStatus::Incoherent);
  }
  // the pairwise rule set can only produce less
  SdsExtension binary =
      sds_natural_extension(base, a, cl, ExtensionMode::binary_rules);
  if (full.status == ExtensionStatus::Extended &&
      binary.status == ExtensionStatus::Extended) {
    for (ThingSet s : binary.result.sets()) {
      CHECK(full.result.contains(s));
    }
  }
}

std::vector<Assessment> assessment_seeds(int n) {
  return {Assessment{},
          Assessment{ThingSet::singleton(0), ThingSet()},
          Assessment{ThingSet(), ThingSet::singleton(n - 1)},
          Assessment{ThingSet::singleton(0), ThingSet::singleton(n - 1)}};
}

}  // namespace

TEST_CASE("preference chains extend to their transitive completion") {
  Universe u = Universe::preferences({"o1", "o2", "o3"},
                                     {{0, 1}, {1, 2}, {0, 2}});
  auto cl = checked(ClosureOperator::transitive(u));
  SdtExtension ext =
      sdt_natural_extension(ThingSet(0b011), Assessment{}, *cl);
  CHECK(ext.status == ExtensionStatus::Extended);
  CHECK(ext.result == ThingSet(0b111));
}

TEST_CASE("a base whose closure meets a forbidden thing is incoherent") {
  auto cl = sticky2();
  Assessment a{ThingSet::singleton(1), ThingSet()};  // b forbidden
  SdtExtension ext = sdt_natural_extension(ThingSet::singleton(0), a, *cl);
  CHECK(ext.status == ExtensionStatus::Incoherent);
  CHECK(ext.conflict == ThingSet::singleton(1));
}

TEST_CASE("required things join the base before closing") {
  auto cl = sticky2();
  Assessment a{ThingSet(), ThingSet::singleton(0)};  // a required, drags b
  SdtExtension ext = sdt_natural_extension(ThingSet(), a, *cl);
  CHECK(ext.status == ExtensionStatus::Extended);
  CHECK(ext.result == ThingSet(0b11));
}

TEST_CASE("smallest coherent supersets: exhaustive sweep of every base") {
  std::vector<ClosurePtr> ops = {
      checked(ClosureOperator::identity(Universe::opaque({"a", "b"}))),
      sticky2(),
      checked(ClosureOperator::identity(Universe::opaque({"a", "b", "c"}))),
      fuse3(),
  };
  for (const ClosurePtr& cl : ops) {
    for (const Assessment& a : assessment_seeds(cl->universe().size())) {
      check_sdt_against_oracle(*cl, a);
    }
  }
}

TEST_CASE("family extension equals the intersection of coherent supersets") {
  SUBCASE("every base over two things") {
    std::vector<ClosurePtr> ops = {
        checked(ClosureOperator::identity(Universe::opaque({"a", "b"}))),
        sticky2(),
    };
    const std::vector<ThingSet> pool = {ThingSet(0b01), ThingSet(0b10),
                                        ThingSet(0b11)};
    for (const ClosurePtr& cl : ops) {
      for (const Assessment& a : assessment_seeds(2)) {
        for (std::uint32_t pick = 0; pick < 8; ++pick) {
          Family base;
          for (int i = 0; i < 3; ++i) {
            if ((pick >> i) & 1u) base.insert(pool[i]);
          }
          check_sds_base_against_oracle(base, a, *cl);
        }
      }
    }
  }

  SUBCASE("seeded bases over three things") {
    std::vector<ClosurePtr> ops = {
        checked(ClosureOperator::identity(Universe::opaque({"a", "b", "c"}))),
        fuse3(),
    };
    std::mt19937_64 rng(20240817);
    int cases = 0;
    for (const ClosurePtr& cl : ops) {
      for (const Assessment& a :
           {Assessment{}, Assessment{ThingSet::singleton(0),
                                     ThingSet::singleton(2)}}) {
        for (int trial = 0; trial < 4; ++trial) {
          Family base;
          for (std::uint32_t mask = 1; mask < 8; ++mask) {
            if (rng() % 3 == 0) base.insert(ThingSet(mask));
          }
          check_sds_base_against_oracle(base, a, *cl);
          ++cases;
        }
      }
    }
    CHECK(cases >= 10);
  }
}

TEST_CASE("an unprunable required base is reported incoherent") {
  auto cl = checked(ClosureOperator::identity(Universe::opaque({"a", "b"})));
  Assessment a{ThingSet::singleton(0), ThingSet::singleton(0)};
  SdsExtension ext = sds_natural_extension(Family(), a, *cl);
  CHECK(ext.status == ExtensionStatus::Incoherent);
}

TEST_CASE("extension needs verified laws") {
  auto cl = ClosureOperator::identity(Universe::opaque({"a"}));
  CHECK_THROWS_AS(sdt_natural_extension(ThingSet(), Assessment{}, *cl),
                  LawsUnverified);
  CHECK_THROWS_AS(sds_natural_extension(Family(), Assessment{}, *cl),
                  LawsUnverified);
}
