#include <catch_amalgamated.hpp>

#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace kratzer;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("reference cell parsing") {
  const auto ok = parse_reference_cell("-2.467310304097");
  CHECK(ok.value == -2.467310304097);
  CHECK_FALSE(ok.malformed);
  const auto bad = parse_reference_cell("0543929725280");
  CHECK(bad.malformed);
  CHECK(bad.value == 0.543929725280);
  CHECK(bad.text == "0543929725280");
  CHECK_FALSE(parse_reference_cell("0").malformed);
  CHECK_THROWS_AS(parse_reference_cell(""), InputError);
  CHECK_THROWS_AS(parse_reference_cell("1.2x"), InputError);
}

TEST_CASE("reference tables load") {
  for (int id : kTableIds) {
    const auto t = load_reference_table(id);
    INFO("table " << id);
    CHECK(!t.rows.empty());
    CHECK(!t.columns.empty());
    for (const auto& row : t.rows) CHECK(row.cells.size() == t.columns.size());
  }
  CHECK(load_reference_table(2).potential == PotentialKind::kratzer);
  CHECK(load_reference_table(7).potential == PotentialKind::modified);
  CHECK_THROWS_AS(load_reference_table(6), DomainError);
  CHECK_THROWS_AS(reproduce_table(1), DomainError);
}

TEST_CASE("tables reproduce with default constants") {
  for (int id : kTableIds) {
    const auto r = reproduce_table(id);
    INFO("table " << id << " max rel " << r.max_rel_eqr);
    CHECK(r.max_rel_eqr < 2e-5);
    CHECK(r.eqr_pass());
  }
}

TEST_CASE("tables reproduce with calibrated constants") {
  TableRunOptions opt;
  opt.calibrate = true;
  for (int id : kTableIds) {
    const auto r = reproduce_table(id, opt);
    INFO("table " << id << " max rel " << r.max_rel_eqr);
    CHECK(r.calibrated);
    CHECK(r.max_rel_eqr < 1e-7);
    CHECK(r.pass());
  }
}

TEST_CASE("dimensional partners are bit-identical") {
  for (int id : {4, 5}) {
    const auto r = reproduce_table(id);
    INFO("table " << id);
    REQUIRE(!r.partners.empty());
    for (const auto& p : r.partners) {
      CHECK(p.low_dim.M() == p.high_dim.M());
      CHECK(p.computed_identical);
      CHECK(p.printed_identical);
    }
    CHECK(r.partners_pass());
  }
}

TEST_CASE("the malformed modified-Kratzer entry is detected and recomputed") {
  TableRunOptions opt;
  opt.calibrate = true;
  const auto r = reproduce_table(7, opt);
  CHECK(r.malformed_count == 1);
  int seen = 0;
  for (const auto& e : r.entries) {
    if (!e.malformed) continue;
    ++seen;
    CHECK(e.molecule == "CO");
    CHECK(e.state == QuantumState{5, 4, 3});
    CHECK_THAT(e.computed, WithinRel(oracle::kCO54ModifiedCalibrated, 1e-10));
  }
  CHECK(seen == 1);
}

TEST_CASE("comparison columns agree to 1e-4 eV") {
  for (int id : {7, 8})
    for (bool cal : {false, true}) {
      TableRunOptions opt;
      opt.calibrate = cal;
      const auto r = reproduce_table(id, opt);
      INFO("table " << id << " calibrated " << cal);
      REQUIRE(r.max_abs_comparison.count("NU"));
      CHECK(r.max_abs_comparison.at("NU") < 1e-4);
      CHECK(r.comparison_pass());
    }
}

TEST_CASE("calibrated constants") {
  const auto& c = testing_support::calibrated();
  CHECK_THAT(c.amu_c2, WithinRel(oracle::kCalibratedAmu, 1e-12));
  REQUIRE(c.ev_per_wavenumber);
  CHECK_THAT(*c.ev_per_wavenumber, WithinRel(oracle::kEvPerWavenumberCalibrated, 1e-10));
  CHECK(c.hbar_c == PhysicalConstants{}.hbar_c);
  const auto lih = testing_support::molecule("LiH");
  CHECK_THAT(kratzer_energy(lih.De, lih.re, lih.mu, {0, 0, 3}, c), WithinAbs(-2.467310304097, 1e-12));
}
