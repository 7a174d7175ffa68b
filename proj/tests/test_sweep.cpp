// Unit tests for the temperature sweep driver, CSV writer, the structural
// selfcheck suite and the published reference tables.
//
// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fermipar/qinfo.hpp>
#include <fermipar/reference.hpp>
#include <fermipar/selfcheck.hpp>
#include <fermipar/sweep.hpp>
#include <fermipar/thermal.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

using namespace fermipar::sweep;
namespace reference = fermipar::reference;
namespace selfcheck = fermipar::selfcheck;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("all_columns: canonical order") {
  const auto& cols = all_columns();
  const std::vector<std::string> expected = {
      "t_m",          "m_pp",         "m_mm",          "m_pm",
      "h_pp",         "entropy_rho1", "entropy_rho2",  "entropy_rho12",
      "mutual_info",  "min_pt_eig"};
  CHECK(cols == expected);
}

TEST_CASE("column_value: lookup and unknown-name guard") {
  OutputRecord rec;
  rec.t_m = 1.5;
  rec.mutual_info = 0.25;
  CHECK(column_value(rec, "t_m") == 1.5);
  CHECK(column_value(rec, "mutual_info") == 0.25);
  CHECK_THROWS_AS(column_value(rec, "no_such_column"), std::invalid_argument);
}

TEST_CASE("evaluate_point: one full record against module-level results") {
  const OutputRecord rec = evaluate_point(1, 1.0, kPi / 4, 0.0);
  const auto tc = fermipar::thermal::coefficients(1, 1.0);
  CHECK(rec.t_m == 1.0);
  CHECK(std::abs(rec.m_pp - tc.m_pp) <= 1e-15);
  CHECK(std::abs(rec.m_mm - tc.m_mm) <= 1e-15);
  CHECK(std::abs(rec.m_pm - tc.m_pm) <= 1e-15);
  CHECK(std::abs(rec.h_pp - 0.645978555430137) <= 1e-12);
  CHECK(std::abs(rec.entropy_rho1 - 0.622368764160836) <= 1e-12);
  CHECK(std::abs(rec.entropy_rho2 - 0.649900590248088) <= 1e-12);
  CHECK(std::abs(rec.entropy_rho12 - 0.963203543419746) <= 1e-12);
  CHECK(std::abs(rec.mutual_info - 0.309065810989177) <= 1e-12);
  CHECK(rec.min_pt_eig >= 0.0);
}

TEST_CASE("run_sweep: grid layout") {
  SweepSpec spec;
  spec.t_min = 1e-3;
  spec.t_max = 1e2;
  spec.points = 11;
  const auto records = run_sweep(spec);
  REQUIRE(records.size() == 11);
  CHECK(records.front().t_m == 1e-3);
  CHECK(records.back().t_m == doctest::Approx(1e2).epsilon(1e-15));
  for (size_t i = 1; i < records.size(); ++i) {
    CHECK(records[i].t_m > records[i - 1].t_m);
    // Log spacing: constant ratio.
    if (i > 1) {
      CHECK(records[i].t_m / records[i - 1].t_m ==
            doctest::Approx(records[1].t_m / records[0].t_m).epsilon(1e-12));
    }
  }

  // Linear spacing option.
  spec.log_spaced = false;
  spec.t_min = 1.0;
  spec.t_max = 2.0;
  spec.points = 5;
  const auto lin = run_sweep(spec);
  REQUIRE(lin.size() == 5);
  CHECK(lin[1].t_m == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(lin[3].t_m == doctest::Approx(1.75).epsilon(1e-15));
}

TEST_CASE("run_sweep: scheduling-independent results") {
  SweepSpec spec;
  spec.t_min = 0.1;
  spec.t_max = 10.0;
  spec.points = 7;

  spec.threads = 1;
  const auto serial = run_sweep(spec);
  spec.threads = 4;
  const auto parallel = run_sweep(spec);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    // Bitwise identical: the grid index, not the scheduler, owns the work.
    CHECK(serial[i].t_m == parallel[i].t_m);
    CHECK(serial[i].m_pp == parallel[i].m_pp);
    CHECK(serial[i].mutual_info == parallel[i].mutual_info);
    CHECK(serial[i].min_pt_eig == parallel[i].min_pt_eig);
  }
}

TEST_CASE("run_sweep: spec validation") {
  SweepSpec spec;
  spec.points = 1;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec = {};
  spec.points = 100001;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec = {};
  spec.t_min = 0.0;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec = {};
  spec.t_min = 2.0;
  spec.t_max = 1.0;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec = {};
  spec.s = 2;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec = {};
  spec.chi = -0.5;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
}

TEST_CASE("write_csv: header, row count, exact round-trip") {
  SweepSpec spec;
  spec.t_min = 0.5;
  spec.t_max = 2.0;
  spec.points = 3;
  const auto records = run_sweep(spec);

  std::ostringstream out;
  write_csv(out, records);
  const std::string text = out.str();

  std::istringstream in(text);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line ==
        "t_m,m_pp,m_mm,m_pm,h_pp,entropy_rho1,entropy_rho2,entropy_rho12,"
        "mutual_info,min_pt_eig");

  // %.17g round-trips doubles exactly.
  for (const auto& rec : records) {
    REQUIRE(std::getline(in, line));
    std::istringstream row(line);
    std::string cell;
    for (const auto& col : all_columns()) {
      REQUIRE(std::getline(row, cell, ','));
      CHECK(std::strtod(cell.c_str(), nullptr) == column_value(rec, col));
    }
  }
  CHECK_FALSE(std::getline(in, line));  // no trailing rows

  // Bitwise deterministic.
  std::ostringstream out2;
  write_csv(out2, records);
  CHECK(out2.str() == text);
}

TEST_CASE("write_csv: column subset and unknown-column guard") {
  const std::vector<OutputRecord> records = {evaluate_point(1, 1.0, kPi / 4, 0.0)};
  std::ostringstream out;
  write_csv(out, records, {"t_m", "mutual_info"});
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "t_m,mutual_info");

  // Unknown columns are rejected before anything is written.
  std::ostringstream bad;
  CHECK_THROWS_AS(write_csv(bad, records, {"t_m", "bogus"}),
                  std::invalid_argument);
  CHECK(bad.str().empty());
}

TEST_CASE("reference: published tables are internally consistent") {
  // Temperatures descend; sectors sum to 1 within print precision.
  for (size_t i = 1; i < reference::kCoefficientTable.size(); ++i) {
    CHECK(reference::kCoefficientTable[i].t_m <
          reference::kCoefficientTable[i - 1].t_m);
  }
  for (const auto& row : reference::kCoefficientTable) {
    CHECK(std::abs(row.m_pp + row.m_mm - 1.0) <= 1e-4);
  }
  // The difference table matches the coefficient table where both have rows.
  for (const auto& drow : reference::kDifferenceTable) {
    for (const auto& crow : reference::kCoefficientTable) {
      if (crow.t_m == drow.t_m) {
        CHECK(std::abs((crow.m_pp - crow.m_mm) - drow.diff) <= 1.2e-4);
      }
    }
  }
}

TEST_CASE("reference: cell_matches tolerance semantics") {
  // Absolute branch: 1e-5 on O(1) cells.
  CHECK(reference::cell_matches(0.500004, 0.5));
  CHECK_FALSE(reference::cell_matches(0.501, 0.5));
  // Relative branch: 1e-3 on tiny cells.
  CHECK(reference::cell_matches(3.2350e-10, 3.2349e-10));
  CHECK(reference::cell_matches(0.0, 3.2349e-10));  // abs branch covers tiny
  CHECK_FALSE(reference::cell_matches(1.0, 0.5));
}

TEST_CASE("selfcheck: quick suite passes and is complete") {
  const auto results = selfcheck::run({/*quick=*/true, /*inject_fault=*/0.0});
  REQUIRE(results.size() == 13);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
    CHECK_FALSE(r.name.empty());
    CHECK_FALSE(r.detail.empty());
  }
  CHECK(selfcheck::all_passed(results));
}

TEST_CASE("selfcheck: injected fault is caught by the table comparison") {
  const auto results = selfcheck::run({/*quick=*/true, /*inject_fault=*/1e-3});
  CHECK_FALSE(selfcheck::all_passed(results));
  int failed = 0;
  for (const auto& r : results) {
    if (!r.passed) {
      ++failed;
      CHECK(r.name == "published-coefficient-table");
    }
  }
  CHECK(failed == 1);
}
