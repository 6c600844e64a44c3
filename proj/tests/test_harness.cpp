#include "doctest.h"

#include <algorithm>
#include <string>

#include "gammavec/harness.hpp"
#include "support.hpp"

using namespace gammavec;
using support::to_counts;

namespace {

const CheckReport* find(const std::vector<CheckReport>& reports, const std::string& name) {
  for (const auto& r : reports)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("provenance names round trip") {
  for (auto p : {Provenance::Poly, Provenance::Recurrence, Provenance::FixedPoint,
                 Provenance::AltSum})
    CHECK(parse_provenance(provenance_name(p)) == p);
  CHECK_FALSE(parse_provenance("bogus").has_value());
}

TEST_CASE("gtable") {
  const auto t = gtable(8, Provenance::Poly);
  REQUIRE(t.rows.size() == 8);
  CHECK(to_counts(t.rows.at(7)) ==
        oracle::Counts{1, 5, 14, 29, 49, 71, 90, 100, 96, 76, 42});
  CHECK(t.rows.at(8)[14] == 100);
  for (auto p : {Provenance::Poly, Provenance::Recurrence, Provenance::FixedPoint,
                 Provenance::AltSum}) {
    const auto small = gtable(2, p);
    CHECK(to_counts(small.rows.at(2)) == oracle::Counts{1});
  }
  for (unsigned n = 1; n <= 8; ++n) CHECK(t.rows.at(n).size() == n * (n - 1) / 4 + 1);
  CHECK_THROWS_AS(gtable(0, Provenance::Poly), std::invalid_argument);
}

TEST_CASE("reference table matches every provenance through n = 8") {
  const auto& ref = reference_g_table();
  REQUIRE(ref.size() == 8);
  for (auto p : {Provenance::Poly, Provenance::Recurrence, Provenance::FixedPoint,
                 Provenance::AltSum}) {
    const auto t = gtable(8, p);
    for (unsigned n = 1; n <= 8; ++n) {
      CAPTURE(n);
      CHECK(to_counts(t.rows.at(n)) == oracle::Counts(ref[n - 1].begin(), ref[n - 1].end()));
    }
  }
}

TEST_CASE("check_all passes on the trivial range") {
  const auto reports = check_all(1);
  CHECK(reports.size() == check_names().size());
  CHECK(all_passed(reports));
}

TEST_CASE("check_all runs in registry order, serial and parallel alike") {
  CheckOptions serial;
  serial.parallel = false;
  serial.fixed_point_limit = 6;
  const auto a = check_all(6, serial);
  CheckOptions parallel = serial;
  parallel.parallel = true;
  const auto b = check_all(6, parallel);
  REQUIRE(a.size() == b.size());
  const auto names = check_names();
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == names[i]);
    CHECK(b[i].name == names[i]);
    CHECK(a[i].passed());
    CHECK(b[i].passed());
    CHECK(a[i].params == b[i].params);
  }
}

TEST_CASE("check_all at n_max = 8 includes the table comparison") {
  const auto reports = check_all(8);
  const auto* table = find(reports, "table1_match");
  REQUIRE(table != nullptr);
  CHECK(table->passed());
  for (const auto& r : reports) {
    CAPTURE(r.name);
    CHECK(r.passed());
  }
}

TEST_CASE("a corrupted basis entry is caught with a witness") {
  CheckOptions options;
  options.basis_fault = BasisFault{6, 2, 1, 1};
  const auto reports = check_all(6, options);
  CHECK_FALSE(all_passed(reports));
  for (const auto& r : reports)
    if (!r.passed()) {
      CAPTURE(r.name);
      REQUIRE(r.witness.has_value());
      CHECK(r.witness->find("first mismatch") != std::string::npos);
    }
  const auto* g = find(reports, "g_from_gamma");
  REQUIRE(g != nullptr);
  CHECK_FALSE(g->passed());
  CHECK(g->witness->find("i=2") != std::string::npos);
  const auto* alt = find(reports, "alternating_sums");
  REQUIRE(alt != nullptr);
  CHECK_FALSE(alt->passed());
  // Checks that never touch the faulty matrix are unaffected.
  CHECK(find(reports, "table1_match")->passed());
  CHECK(find(reports, "polyring_roundtrip")->passed());
}
