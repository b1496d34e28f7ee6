#include <doctest.h>

#include "irrforge/fixtures.hpp"
#include "irrforge/report.hpp"

using namespace irrforge;

TEST_SUITE("report") {

TEST_CASE("L values") {
  LValues l = compute_L_values(std::vector<int>{2, 4, 5, 7, 9}, 120, 23);
  CHECK(l.l1 == make_rational(5, 12));
  CHECK(l.l2 == -80);
  CHECK(l.l3 == 1832);
  CHECK(compute_L_values(std::vector<int>{3, 3, 3, 3, 3}, 0, 10).l1 == 0);
  CHECK_THROWS_AS(compute_L_values(std::vector<int>{1, 1, 1, 1, 1}, 0, 3), Error);
  CHECK_THROWS_AS(compute_L_values(std::vector<int>{1, 2, 3}, 0, 3), Error);
}

TEST_CASE("printed-decimal comparison") {
  CHECK(matches_printed(make_rational(59, 300), "0.2"));
  CHECK_FALSE(matches_printed(make_rational(5, 12), "0.6"));
  CHECK(matches_printed(make_rational(9, 2), "4.5"));
  CHECK(matches_printed(make_rational(2460), "2460"));
  CHECK_FALSE(matches_printed(make_rational(-80), "4"));
  CHECK(matches_printed(make_rational(-1, 4), "-0.3"));
}

TEST_CASE("fixtures are intact") {
  CHECK(table1_fixture().size() == 8);
  CHECK(table2_fixture().size() == 10);
  CHECK(fixture_checksum_ok());
  CHECK(table1_fixture()[0].l3 == "2460");
  CHECK(table2_fixture()[0].irr_max == "268");
  CHECK(kStarEstimateFixture == 228);
}

TEST_CASE("alpha and beta columns all match") {
  TableReport r = reproduce_table2_alpha_beta();
  CHECK(r.rows.size() == 10);
  CHECK(r.count("alpha", CellStatus::Match) == 10);
  CHECK(r.count("beta", CellStatus::Match) == 10);
  CHECK(r.rows[0].cells[0].ours == "4.5");
  CHECK(r.rows[3].cells[1].ours == "16.5");
  CHECK(r.rows[9].cells[0].ours == "21");
}

TEST_CASE("printed irr columns stay unreconciled under both readings") {
  for (auto interp : {Interpretation::CaterpillarArrangements, Interpretation::FullRealizations}) {
    TableReport r = reproduce_tables(2, interp);
    CHECK(r.count("irr_max", CellStatus::Unreconciled) == 10);
    CHECK(r.count("irr_min", CellStatus::Unreconciled) == 10);
    CHECK(r.count("alpha", CellStatus::Match) == 10);
    bool flagged = false;
    for (const auto& f : r.rows[0].findings) flagged |= f == "max < min in fixture";
    CHECK(flagged);
  }
  TableReport r = reproduce_tables(2, Interpretation::FullRealizations);
  CHECK_FALSE(r.rows[0].cells[0].ours.has_value());
}

TEST_CASE("L-value recomputation flags mismatches") {
  TableReport r = reproduce_tables(1, Interpretation::CaterpillarArrangements);
  CHECK(r.rows.size() == 8);
  CHECK(r.checksum_ok);
  CHECK(r.count("L3", CellStatus::Unreconciled) == 8);
  CHECK(r.count("L2", CellStatus::Unreconciled) == 8);
  CHECK(r.count("L1", CellStatus::Match) == 5);
  CHECK(r.rows[0].cells[0].ours == "0.416667 (5/12)");
  CHECK_THROWS_AS(reproduce_tables(3, std::nullopt), Error);
}

TEST_CASE("standing findings") {
  auto f = standing_findings();
  REQUIRE(f.size() == 3);
  CHECK(f[0].ours == "296");
  CHECK(f[0].paper == "228");
  CHECK(f[1].ours == "120");
  CHECK(f[1].paper == "188");
}

}  // TEST_SUITE
