// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "stabwire/classify.hpp"

using namespace stabwire;

namespace {

const OrbitTable& table() {
  static OrbitTable t = compute_orbits();
  return t;
}

const ClassificationReport& report() {
  static ClassificationReport r = sweep(table(), 6, 6, 4);
  return r;
}

}  // namespace

TEST_CASE("orbit table has the expected size") {
  CHECK(table().keys.size() == 75735);
  CHECK(table().orbit_count() == 2649);
}

TEST_CASE("sweep finds thirteen transmission classes") {
  const auto& r = report();
  CHECK(r.class_signatures.size() == 13);
  CHECK(r.records.size() == 2649);

  CHECK(r.class_signatures[0] == ClassSignature::constant(0));
  CHECK(r.class_signatures[12] == ClassSignature::linear(0));
  // Middle classes are ordered by capacity sum.
  for (int c = 1; c + 1 < 12; ++c)
    CHECK(r.class_signatures[c].total() <= r.class_signatures[c + 1].total());

  auto census = r.census();
  CHECK(census[0] == 888);
  CHECK(census[12] == 865);
  std::size_t sum = 0;
  for (const auto& [c, k] : census) sum += k;
  CHECK(sum == 2649);
}

TEST_CASE("phi letters partition the transmission classes") {
  auto cross = phi_transmission_crosstab(report());
  REQUIRE(cross.size() == 7);
  CHECK(cross['a'] == std::set<int>{0});
  CHECK(cross['b'].size() == 2);
  CHECK(cross['c'].size() == 3);
  CHECK(cross['d'].size() == 2);
  CHECK(cross['e'].size() == 2);
  CHECK(cross['f'].size() == 2);
  CHECK(cross['g'] == std::set<int>{12});
}

TEST_CASE("omega classes refine the transmission classes") {
  const auto& r = report();
  CHECK(r.omega_vectors.size() == 19);
  auto cross = r.omega_crosstab();
  REQUIRE(cross.size() == 19);
  std::size_t trivial = 0;
  for (const auto& [oc, tcs] : cross) {
    CHECK(tcs.size() == 1);  // each omega class sits in one class
    if (tcs.count(0)) ++trivial;
  }
  CHECK(trivial == 7);
}

TEST_CASE("standard local generator families all appear") {
  auto verdicts = zl_table_check(table());
  REQUIRE(verdicts.size() == 9);
  for (const auto& v : verdicts) {
    INFO(v.family);
    CHECK(v.matched);
  }
}

TEST_CASE("same-signature representatives agree beyond the base grid") {
  auto witnesses = proposition1_check(table(), report(), 7, 7, 1, 20, 4);
  CHECK(witnesses.empty());
}

TEST_CASE("named fixtures land on their signatures") {
  auto fx = find_fixtures(table());
  const auto& t = table();

  CHECK(t.ordinal_of(tensor_key(fx.cluster)) == 34);
  CHECK(t.ordinal_of(tensor_key(fx.toric)) == 4877);

  for (std::size_t n = 1; n <= 6; ++n) {
    auto cl = capacity_profile(fx.cluster, n, 6);
    auto gh = capacity_profile(fx.ghz, n, 6);
    auto to = capacity_profile(fx.toric, n, 6);
    for (std::size_t d = 1; d <= 6; ++d) {
      CHECK(cl[d - 1] == n);
      CHECK(gh[d - 1] == 1);
      CHECK(to[d - 1] == n - 1);
    }
  }

  CHECK(local_form(fx.cluster).form == LocalFormLabel::Case::i);
  CHECK(local_form(fx.toric).form == LocalFormLabel::Case::ii);
}

TEST_CASE("csv reports carry the version header") {
  auto csv = report_csv(report());
  CHECK(csv.rfind("# stabwire-report v1", 0) == 0);
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 2649 + 2);  // version + column header + one per orbit

  auto cens = census_csv(report());
  CHECK(cens.rfind("# stabwire-report v1", 0) == 0);
}

TEST_CASE("sweep output does not depend on the worker count") {
  auto r1 = sweep(table(), 6, 6, 1);
  CHECK(report_csv(r1) == report_csv(report()));
  CHECK(census_csv(r1) == census_csv(report()));
}
