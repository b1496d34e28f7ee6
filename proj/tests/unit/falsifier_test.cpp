#include <doctest.h>

#include "../oracles.hpp"
#include "irrforge/falsifier.hpp"
#include "irrforge/serialize.hpp"

using namespace irrforge;

namespace {

Tree path(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return make_tree(n, e);
}

SearchSpace trees(int lo, int hi, int workers = 0) {
  SearchSpace s;
  s.family = Family::AllTrees;
  s.n_min = lo;
  s.n_max = hi;
  s.workers = workers;
  return s;
}

}  // namespace

TEST_SUITE("falsifier") {

TEST_CASE("AllTrees instances are exhaustive per order") {
  auto inst = generate_instances(trees(1, 8));
  std::map<int, std::size_t> per_order;
  for (const auto& i : inst) ++per_order[i.n];
  for (int n = 1; n <= 8; ++n) CHECK(per_order[n] == oracle::unlabeled_count(n));
  for (const auto& i : inst) {
    REQUIRE(i.tree);
    CHECK(i.irr_min);
    CHECK(*i.irr_min <= *i.irr);
    CHECK(*i.irr <= *i.irr_max);
  }
}

TEST_CASE("B02 never fails, B08 fails from n = 3") {
  auto r = scan(trees(2, 5), {"B02", "B08"});
  CHECK(r.stats.at("B02").violated == 0);
  CHECK_FALSE(r.stats.at("B02").minimal_counterexample);
  const auto& b8 = r.stats.at("B08");
  CHECK(b8.holds == 1);
  REQUIRE(b8.minimal_counterexample);
  CHECK(b8.minimal_counterexample->instance.n == 3);
  CHECK(b8.minimal_counterexample->instance.degree_sequence.to_string() == "1,1,2");
}

TEST_CASE("B14 minimal counterexamples") {
  // The inequality already fails on P2: irr 0 against 4/2 + 1 + 2 = 5.
  auto full = scan(trees(2, 6), {"B14"});
  const auto& cx = full.stats.at("B14").minimal_counterexample;
  REQUIRE(cx);
  CHECK(cx->instance.n == 2);
  CHECK(cx->verdict.rhs->to_string() == "5");

  // Restricted to n >= 4 the least degree sequence is the star (1,1,1,3).
  auto from4 = scan(trees(4, 6), {"B14"});
  const auto& c4 = from4.stats.at("B14").minimal_counterexample;
  REQUIRE(c4);
  CHECK(c4->instance.n == 4);
  CHECK(c4->instance.degree_sequence.to_string() == "1,1,1,3");
  CHECK(c4->verdict.rhs->to_string() == "14");
  CHECK(from4.stats.at("B14").holds == 0);
}

TEST_CASE("counterexamples re-verify") {
  auto r = scan(trees(2, 7), parse_bound_ids("all"));
  for (const auto& [id, s] : r.stats)
    if (s.minimal_counterexample) CHECK(reverifies(*s.minimal_counterexample));
}

TEST_CASE("reports do not depend on the worker count") {
  auto a = to_json(scan(trees(2, 8, 1), parse_bound_ids("all"))).dump();
  auto b = to_json(scan(trees(2, 8, 3), parse_bound_ids("all"))).dump();
  CHECK(a == b);
}

TEST_CASE("caterpillar and sequence families") {
  SearchSpace cat;
  cat.family = Family::Caterpillars;
  cat.n_min = 2;
  cat.n_max = 7;
  auto inst = generate_instances(cat);
  CHECK_FALSE(inst.empty());
  for (const auto& i : inst) {
    REQUIRE(i.spine);
    CHECK(i.interpretation == Interpretation::CaterpillarArrangements);
    if (i.spine->length() >= 2) CHECK(*i.irr_min <= *i.irr);
  }
  SearchSpace seq;
  seq.family = Family::RealizableSequences;
  seq.n_min = 2;
  seq.n_max = 7;
  auto si = generate_instances(seq);
  std::size_t expected = 0;
  for (int n = 2; n <= 7; ++n) expected += tree_degree_sequences(n).size();
  CHECK(si.size() == expected);
  for (const auto& i : si) CHECK_FALSE(i.tree);

  SearchSpace bad = trees(2, 5);
  bad.interpretation = Interpretation::CaterpillarArrangements;
  CHECK_THROWS_AS(generate_instances(bad), Error);
  CHECK_THROWS_AS(generate_instances(trees(2, 13)), Error);
}

TEST_CASE("shrink") {
  Instance p6 = Instance::from_tree(path(6));
  Counterexample c{"B14", p6, evaluate_bound(lookup("B14"), p6)};
  REQUIRE(c.verdict.status == Status::Violated);
  Counterexample s = shrink(c);
  CHECK(s.verdict.status == Status::Violated);
  CHECK(s.instance.n == 2);
  CHECK(reverifies(s));
  // Idempotent on an already minimal input.
  Counterexample again = shrink(s);
  CHECK(again.instance.n == s.instance.n);
  CHECK(again.instance.degree_sequence == s.instance.degree_sequence);

  Counterexample ok{"B02", p6, evaluate_bound(lookup("B02"), p6)};
  try {
    shrink(ok);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InputNotViolated);
  }
}

TEST_CASE("minimality order") {
  Instance a = Instance::from_tree(path(4));
  Instance b = Instance::from_tree(make_tree(4, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(counterexample_less(b, a));
  CHECK_FALSE(counterexample_less(a, b));
  CHECK(counterexample_less(Instance::from_tree(path(3)), b));
}

}  // TEST_SUITE
