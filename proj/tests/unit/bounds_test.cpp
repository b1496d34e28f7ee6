#include <doctest.h>

#include <cmath>
#include <set>

#include "../oracles.hpp"
#include "irrforge/bounds.hpp"
#include "irrforge/treegen.hpp"

using namespace irrforge;

namespace {

Tree path(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return make_tree(n, e);
}

Tree star(int leaves) {
  std::vector<Edge> e;
  for (int i = 2; i <= leaves + 1; ++i) e.push_back({1, i});
  return make_tree(leaves + 1, e);
}

Verdict eval(const std::string& id, const Instance& inst, Mode mode = Mode::Literal) {
  EvalOptions opt;
  opt.mode = mode;
  return evaluate_bound(lookup(id), inst, opt);
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("catalog shape") {
  CHECK(catalog().size() == 17);
  CHECK(lookup("B01").relation == Relation::LessEqual);
  std::set<std::string> ids;
  for (const auto& r : catalog()) {
    CHECK_FALSE(r.quote.empty());
    CHECK_FALSE(r.location.empty());
    CHECK_FALSE(r.statement.empty());
    ids.insert(r.id);
  }
  CHECK(ids.size() == 17);
  CHECK(ids.count("B15b") == 1);
  CHECK_THROWS_AS(lookup("B99"), Error);
  CHECK(parse_bound_ids("all").size() == 17);
  CHECK(parse_bound_ids("B01, B14") == std::vector<std::string>{"B01", "B14"});
  CHECK_THROWS_AS(parse_bound_ids("B01,B77"), Error);
}

TEST_CASE("B01 on the star K_{1,4}") {
  Verdict v = eval("B01", Instance::from_tree(star(4)));
  CHECK(v.status == Status::Violated);
  REQUIRE(v.lhs);
  REQUIRE(v.rhs);
  CHECK(v.lhs->to_string() == "12");
  CHECK(v.rhs->to_string() == "4");
  CHECK(v.slack_string() == "-8");
}

TEST_CASE("B01 keeps irrational sides exact") {
  // P5: m*sum(d^2) - 4m^2 = 4*14 - 64 < 0.
  CHECK(eval("B01", Instance::from_tree(path(5))).status == Status::Undefined);
  // K_{1,3}: 3*12 - 36 = 0, irr 6 > 0.
  Verdict v = eval("B01", Instance::from_tree(star(3)));
  CHECK(v.status == Status::Violated);
  CHECK(v.rhs->to_string() == "0");
}

TEST_CASE("B02 and B08 identities") {
  for (const Tree& t : oracle::corpus(8)) {
    Instance inst = Instance::from_tree(t);
    Verdict b2 = eval("B02", inst);
    CHECK(b2.status == Status::Holds);
    CHECK(b2.slack_string() == "0");
    Verdict b8 = eval("B08", inst);
    CHECK((b8.status == Status::Holds) == (t.order() == 2));
    if (t.order() != 2) CHECK(b8.status == Status::Violated);
  }
  CHECK(eval("B08", Instance::from_tree(path(4))).rhs->to_string() == "6");
}

TEST_CASE("B14 on P4") {
  Verdict v = eval("B14", Instance::from_tree(path(4)));
  CHECK(v.status == Status::Violated);
  CHECK(v.lhs->to_string() == "2");
  CHECK(v.rhs->to_string() == "14");
}

TEST_CASE("denominator guards and missing symbols") {
  auto all = evaluate_all(Instance::from_tree(path(2)));
  REQUIRE(all.size() == 17);
  std::map<std::string, Status> by_id;
  for (const auto& v : all) by_id[v.bound_id] = v.status;
  CHECK(by_id["B10"] == Status::NotApplicable);  // irr_max absent
  CHECK(by_id["B03"] == Status::NotApplicable);
  for (const char* id : {"B03", "B04", "B05", "B09"}) CHECK(by_id[id] == Status::NotApplicable);

  // With extremal values present, P2 hits the Δ = 1 denominators.
  Instance p2 = Instance::from_tree(path(2));
  p2.with_extremal(extremal_over_realizations(p2.degree_sequence));
  CHECK(eval("B03", p2).status == Status::Undefined);
  CHECK(eval("B10", p2).status == Status::Undefined);
  CHECK(eval("B13", p2).status == Status::Undefined);
}

TEST_CASE("evaluate_all on K_{1,4}") {
  auto all = evaluate_all(Instance::from_tree(star(4)));
  CHECK(all.size() == 17);
  CHECK(all[1].bound_id == "B02");
  CHECK(all[1].status == Status::Holds);
  CHECK(all.back().bound_id == "B16");
  CHECK(all[15].bound_id == "B15b");
}

TEST_CASE("proof mode only adds NOT_APPLICABLE verdicts") {
  for (const Tree& t : oracle::corpus(7, 2)) {
    Instance inst = Instance::from_tree(t);
    inst.with_extremal(extremal_over_realizations(inst.degree_sequence));
    EvalOptions lit, prf;
    prf.mode = Mode::Proof;
    auto a = evaluate_all(inst, lit);
    auto b = evaluate_all(inst, prf);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].status == Status::NotApplicable) CHECK(b[i].status == Status::NotApplicable);
      if (b[i].status != Status::NotApplicable) CHECK(b[i].status == a[i].status);
    }
  }
}

TEST_CASE("chain verdicts expose their links") {
  Instance inst = Instance::from_tree(star(4));
  Verdict v = eval("B11", inst);
  CHECK(v.links.size() == 2);
  Verdict w = eval("B15", inst);
  REQUIRE(w.links.size() == 2);
  bool saw_default = false;
  for (auto& [k, val] : w.params) saw_default |= k == "lambda_min_source" && val == "default";
  CHECK(saw_default);
  inst.lambda_min = make_rational(1);
  Verdict o = eval("B15", inst);
  bool saw_override = false;
  for (auto& [k, val] : o.params) saw_override |= k == "lambda_min_source" && val == "override";
  CHECK(saw_override);
}

TEST_CASE("arrangement instances feed the irr_min bounds") {
  BackboneArrangement b({2, 4, 5, 7, 9});
  Instance inst = Instance::from_arrangement(b);
  inst.with_extremal(extremal_over_arrangements(std::vector<int>{2, 4, 5, 7, 9}));
  CHECK(*inst.irr == 120);
  CHECK(*inst.irr_min == 120);
  CHECK(*inst.irr_max == 132);
  CHECK(inst.m == 23);
  Verdict v = eval("B03", inst);
  CHECK(v.status == Status::Holds);  // 240/576 sits in (0, 1)
  CHECK(eval("B09", inst).status == Status::Violated);
}

TEST_CASE("series against its floor/ceiling form") {
  CHECK(series_lhs(2.0) == 3.0);
  CHECK(series_lhs(1.0) == 1.0);
  CHECK(std::fabs(series_rhs(2.0, 200000) - 3.0) < 5e-3);
  // The analytic tail: with K terms the error of the truncated sum is O(1/K).
  CHECK(std::fabs(series_rhs(2.0, 200000) - 3.0) < 1e-4);
  for (double n : {2.2, 3.2, 5.6}) CHECK(std::fabs(series_rhs(n, 200000) - series_lhs(n)) < 5e-3);
  CHECK(std::fabs(series_rhs(1.0, 200000) - 1.5) < 1e-9);
  CHECK(std::fabs(series_rhs(1.0, 200000) - series_lhs(1.0)) >= 0.4);
  for (double n : {0.3, 1.7, 2.2, 4.1}) {
    const double dr = series_rhs(n, 5000) - series_rhs(n + 3, 5000);
    const double dl = series_lhs(n) - series_lhs(n + 3);
    CHECK(std::fabs(dr - dl) < 1e-9);
  }
  CHECK(distance_to_discontinuity(1.0) < 1e-12);
  CHECK(std::fabs(distance_to_discontinuity(2.0) - 0.5) < 1e-12);
}

TEST_CASE("B16 applicability") {
  CHECK(eval("B16", Instance::from_tree(path(3))).status == Status::NotApplicable);  // 2n/3 = 2
  CHECK(eval("B16", Instance::from_tree(path(4))).status == Status::NotApplicable);  // ceiling term jumps at n = 4
  Verdict v = eval("B16", Instance::from_tree(path(2)));
  CHECK(v.status == Status::Holds);
  EvalOptions opt;
  opt.include_discontinuities = true;
  CHECK(evaluate_bound(lookup("B16"), Instance::from_tree(path(4)), opt).status == Status::Violated);
}

TEST_CASE("verdicts are deterministic") {
  Instance inst = Instance::from_tree(star(5));
  auto a = evaluate_all(inst), b = evaluate_all(inst);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].slack_string() == b[i].slack_string());
  }
}

}  // TEST_SUITE
