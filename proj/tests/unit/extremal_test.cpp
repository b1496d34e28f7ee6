#include <doctest.h>

#include <algorithm>
#include <random>

#include "../oracles.hpp"
#include "irrforge/extremal.hpp"
#include "irrforge/treegen.hpp"

using namespace irrforge;

namespace {

// Independent arrangement oracle: every distinct permutation, direct edge sum
// on the built caterpillar.
std::pair<std::int64_t, std::int64_t> arrangement_oracle(std::vector<int> ms) {
  std::sort(ms.begin(), ms.end());
  std::int64_t lo = INT64_MAX, hi = INT64_MIN;
  do {
    if (!BackboneArrangement::is_valid(ms)) continue;
    const auto v = oracle::albertson(build_caterpillar(BackboneArrangement(ms)));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  } while (std::next_permutation(ms.begin(), ms.end()));
  return {lo, hi};
}

}  // namespace

TEST_SUITE("extremal") {

TEST_CASE("arrangement examples") {
  auto r = extremal_over_arrangements(std::vector<int>{1, 2, 3});
  CHECK(r.min_value == 6);
  CHECK(r.max_value == 6);
  CHECK(r.interpretation == Interpretation::CaterpillarArrangements);

  auto s = extremal_over_arrangements(std::vector<int>{9, 5, 2, 7, 4});
  CHECK(s.min_value == 120);
  CHECK(s.max_value == 132);
  CHECK(std::get<BackboneArrangement>(s.argmin).to_string() == BackboneArrangement({2, 4, 5, 7, 9}).to_string());
  CHECK(s.instances_examined == 60);

  auto t = extremal_over_arrangements(std::vector<int>{2, 2, 2});
  CHECK(t.min_value == 2);
  CHECK(t.max_value == 2);
}

TEST_CASE("arrangement errors") {
  auto kind = [](std::vector<int> ms) {
    try {
      extremal_over_arrangements(ms);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kind({3}) == ErrorKind::NoValidArrangement);
  CHECK(kind({1, 1, 1}) == ErrorKind::NoValidArrangement);
  CHECK(kind({2, 2, 2, 2, 2, 2, 2, 2, 2, 2}) == ErrorKind::TooLarge);
}

TEST_CASE("arrangements: oracle agreement, witnesses, permutation invariance") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(2, 6), val(1, 7);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<int> ms(len(rng));
    for (int& x : ms) x = val(rng);
    if (std::count(ms.begin(), ms.end(), 1) > 2) continue;
    auto [lo, hi] = arrangement_oracle(ms);
    auto r = extremal_over_arrangements(ms);
    CHECK(r.min_value == lo);
    CHECK(r.max_value == hi);
    CHECK(witness_value(r.argmin) == r.min_value);
    CHECK(witness_value(r.argmax) == r.max_value);
    std::shuffle(ms.begin(), ms.end(), rng);
    auto again = extremal_over_arrangements(ms);
    CHECK(again.min_value == r.min_value);
    CHECK(again.max_value == r.max_value);
    CHECK(std::get<BackboneArrangement>(again.argmin) == std::get<BackboneArrangement>(r.argmin));
    auto serial = extremal_over_arrangements_serial(ms);
    CHECK(std::get<BackboneArrangement>(serial.argmax) == std::get<BackboneArrangement>(r.argmax));
    CHECK(serial.instances_examined == r.instances_examined);
  }
}

TEST_CASE("parallel arrangement search is worker-count independent") {
  std::vector<int> ms{2, 3, 3, 4, 5, 6, 7, 8};
  auto serial = extremal_over_arrangements_serial(ms);
  for (int w : {1, 2, 5}) {
    auto r = extremal_over_arrangements(ms, w);
    CHECK(r.min_value == serial.min_value);
    CHECK(r.max_value == serial.max_value);
    CHECK(std::get<BackboneArrangement>(r.argmin) == std::get<BackboneArrangement>(serial.argmin));
    CHECK(std::get<BackboneArrangement>(r.argmax) == std::get<BackboneArrangement>(serial.argmax));
  }
}

TEST_CASE("realization examples") {
  auto r = extremal_over_realizations(DegreeSequence({1, 1, 2, 2}));
  CHECK(r.min_value == 2);
  CHECK(r.max_value == 2);
  auto s = extremal_over_realizations(DegreeSequence({1, 1, 1, 1, 3, 3}));
  CHECK(s.min_value == 8);
  CHECK(s.max_value == 8);
  auto t = extremal_over_realizations(DegreeSequence({1, 1, 1, 1, 1, 2, 3, 4}));
  CHECK(t.min_value < t.max_value);
  CHECK(witness_value(t.argmin) == t.min_value);
  CHECK(witness_value(t.argmax) == t.max_value);
  CHECK_THROWS_AS(extremal_over_realizations(DegreeSequence({2, 4, 5, 7, 9})), Error);
}

TEST_CASE("realizations bracket the greedy tree and match the oracle") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& d : tree_degree_sequences(n)) {
      auto r = extremal_over_realizations(d);
      const auto g = albertson_index(greedy_tree(d));
      CHECK(r.min_value <= g);
      CHECK(g <= r.max_value);
      std::int64_t lo = INT64_MAX, hi = INT64_MIN;
      for (const auto& t : enumerate_labeled_trees(d)) {
        lo = std::min(lo, oracle::albertson(t));
        hi = std::max(hi, oracle::albertson(t));
      }
      CHECK(r.min_value == lo);
      CHECK(r.max_value == hi);
    }
}

TEST_CASE("adjacency-only minimum") {
  auto a = min_adjacency_arrangement(std::vector<int>{9, 4, 2, 7, 5});
  CHECK(a.arrangement == std::vector<int>{2, 4, 5, 7, 9});
  CHECK(a.adjacency_sum == 7);
  CHECK(min_adjacency_arrangement(std::vector<int>{3, 3, 3}).adjacency_sum == 0);
  CHECK(min_adjacency_arrangement(std::vector<int>{1, 9}).adjacency_sum == 8);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> len(1, 7), val(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> ms(len(rng));
    for (int& x : ms) x = val(rng);
    auto [mn, mx] = std::minmax_element(ms.begin(), ms.end());
    CHECK(brute_force_min_adjacency(ms) == *mx - *mn);
  }
}

TEST_CASE("greedy against brute force") {
  auto a = compare_greedy_to_bruteforce(DegreeSequence({1, 1, 1, 3}));
  CHECK(a.greedy_value == 6);
  CHECK(a.brute_min == 6);
  CHECK(a.equal);
  auto b = compare_greedy_to_bruteforce(DegreeSequence({1, 1, 2, 2}));
  CHECK(b.greedy_value == 2);
  CHECK(b.equal);
}

TEST_CASE("interpretation names") {
  CHECK(std::string(to_string(Interpretation::CaterpillarArrangements)) == "arrangements");
  CHECK(parse_interpretation("realizations") == Interpretation::FullRealizations);
  CHECK_THROWS_AS(parse_interpretation("both"), Error);
}

}  // TEST_SUITE
