#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "irrforge/caterpillar.hpp"
#include "irrforge/graph.hpp"
#include "irrforge/limits.hpp"

namespace irrforge {

// Which family irr_min / irr_max range over. There is deliberately no
// default: callers pick one.
enum class Interpretation { CaterpillarArrangements, FullRealizations };

const char* to_string(Interpretation i);
Interpretation parse_interpretation(const std::string& text);

using Witness = std::variant<Tree, BackboneArrangement>;

struct ExtremalResult {
  Interpretation interpretation;
  std::int64_t min_value = 0;
  std::int64_t max_value = 0;
  Witness argmin;
  Witness argmax;
  std::uint64_t instances_examined = 0;

  std::int64_t spread() const { return max_value - min_value; }
};

// Exact min/max of closed_form_irr over valid arrangements of the multiset,
// one per reversal pair. Witnesses are lexicographically least.
ExtremalResult extremal_over_arrangements(std::span<const int> spine_multiset, int workers = 0);
ExtremalResult extremal_over_arrangements_serial(std::span<const int> spine_multiset);

// Exact min/max of albertson_index over all unlabeled realizations.
ExtremalResult extremal_over_realizations(const DegreeSequence& d, int max_order = kDefaultMaxOrder,
                                          int workers = 0);

struct AdjacencyArrangement {
  std::vector<int> arrangement;
  std::int64_t adjacency_sum = 0;
};

// Sorted order minimizes Σ|b_i − b_{i+1}|; the minimum is max − min.
AdjacencyArrangement min_adjacency_arrangement(std::span<const int> multiset);

// Oracle for the above: exhaustive over all distinct orderings.
std::int64_t brute_force_min_adjacency(std::span<const int> multiset);

struct GreedyComparison {
  std::int64_t greedy_value = 0;
  std::int64_t brute_min = 0;
  bool equal = false;
};

GreedyComparison compare_greedy_to_bruteforce(const DegreeSequence& d,
                                              int max_order = kDefaultMaxOrder);

std::int64_t witness_value(const Witness& w);

}  // namespace irrforge
