#include "irrforge/extremal.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>

#include "irrforge/multiset_perm.hpp"
#include "irrforge/treegen.hpp"

namespace irrforge {

const char* to_string(Interpretation i) {
  return i == Interpretation::CaterpillarArrangements ? "arrangements" : "realizations";
}

Interpretation parse_interpretation(const std::string& text) {
  if (text == "arrangements" || text == "CaterpillarArrangements") return Interpretation::CaterpillarArrangements;
  if (text == "realizations" || text == "FullRealizations") return Interpretation::FullRealizations;
  throw Error(ErrorKind::ParseError, "unknown interpretation '" + text + "'");
}

std::int64_t witness_value(const Witness& w) {
  if (const auto* t = std::get_if<Tree>(&w)) return albertson_index(*t);
  return closed_form_irr(std::get<BackboneArrangement>(w));
}

namespace {

struct ArrangementReduction {
  std::int64_t min_value = std::numeric_limits<std::int64_t>::max();
  std::int64_t max_value = std::numeric_limits<std::int64_t>::min();
  std::vector<int> argmin, argmax;
  std::uint64_t examined = 0;

  void add(std::vector<int> const& spine, std::int64_t value) {
    ++examined;
    if (value < min_value || (value == min_value && spine < argmin)) {
      min_value = value;
      argmin = spine;
    }
    if (value > max_value || (value == max_value && spine < argmax)) {
      max_value = value;
      argmax = spine;
    }
  }

  // Associative and commutative: (min, least witness), (max, least witness).
  void merge(const ArrangementReduction& o) {
    if (o.examined == 0) return;
    if (o.min_value < min_value || (o.min_value == min_value && o.argmin < argmin)) {
      min_value = o.min_value;
      argmin = o.argmin;
    }
    if (o.max_value > max_value || (o.max_value == max_value && o.argmax < argmax)) {
      max_value = o.max_value;
      argmax = o.argmax;
    }
    examined += o.examined;
  }
};

// One representative per reversal pair: the lexicographically smaller one.
bool is_reversal_representative(const std::vector<int>& spine) {
  return !std::lexicographical_compare(spine.rbegin(), spine.rend(), spine.begin(), spine.end());
}

void consider(const std::vector<int>& spine, ArrangementReduction& acc) {
  if (!BackboneArrangement::is_valid(spine) || !is_reversal_representative(spine)) return;
  acc.add(spine, closed_form_irr(BackboneArrangement(spine)));
}

std::vector<int> validated_multiset(std::span<const int> spine_multiset) {
  std::vector<int> items(spine_multiset.begin(), spine_multiset.end());
  std::sort(items.begin(), items.end());
  if (items.size() < 2)
    throw Error(ErrorKind::NoValidArrangement, "closed form needs at least two spine entries");
  if (items.size() > static_cast<std::size_t>(kMaxArrangementLength))
    throw Error(ErrorKind::TooLarge, "arrangement brute force is capped at " +
                                         std::to_string(kMaxArrangementLength) + " entries");
  if (items.front() < 1) throw Error(ErrorKind::NoValidArrangement, "spine entries must be >= 1");
  if (std::count(items.begin(), items.end(), 1) > 2)
    throw Error(ErrorKind::NoValidArrangement, "more than two entries equal to 1 cannot all sit at the ends");
  return items;
}

ExtremalResult to_result(const ArrangementReduction& acc) {
  if (acc.examined == 0) throw Error(ErrorKind::NoValidArrangement, "no valid arrangement");
  return ExtremalResult{Interpretation::CaterpillarArrangements,
                        acc.min_value,
                        acc.max_value,
                        BackboneArrangement(acc.argmin),
                        BackboneArrangement(acc.argmax),
                        acc.examined};
}

}  // namespace

ExtremalResult extremal_over_arrangements_serial(std::span<const int> spine_multiset) {
  std::vector<int> spine = validated_multiset(spine_multiset);
  ArrangementReduction acc;
  do {
    consider(spine, acc);
  } while (std::next_permutation(spine.begin(), spine.end()));
  return to_result(acc);
}

ExtremalResult extremal_over_arrangements(std::span<const int> spine_multiset, int workers) {
  const std::vector<int> items = validated_multiset(spine_multiset);
  const std::uint64_t total = multiset_permutation_count(items);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const auto bounds = chunk_bounds(total, static_cast<std::uint64_t>(threads) * 8);
  const auto chunks = static_cast<std::int64_t>(bounds.size() - 1);
  std::vector<ArrangementReduction> partial(static_cast<std::size_t>(chunks));

#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    std::vector<int> spine = unrank_multiset_permutation(items, bounds[c]);
    for (std::uint64_t r = bounds[c]; r < bounds[c + 1]; ++r) {
      consider(spine, partial[c]);
      std::next_permutation(spine.begin(), spine.end());
    }
  }

  ArrangementReduction acc;
  for (const auto& p : partial) acc.merge(p);
  return to_result(acc);
}

ExtremalResult extremal_over_realizations(const DegreeSequence& d, int max_order, int workers) {
  if (!is_tree_realizable(d))
    throw Error(ErrorKind::NotRealizable, "(" + d.to_string() + ") is not a tree degree sequence");
  const int cap = std::min(max_order, kHardMaxOrder);
  if (static_cast<int>(d.size()) > cap)
    throw Error(ErrorKind::TooLarge, "realization brute force is capped at n = " + std::to_string(cap));
  auto classes = unlabeled_classes(d, workers);
  std::size_t lo = 0, hi = 0;
  std::vector<std::int64_t> values;
  values.reserve(classes.size());
  for (const auto& c : classes) values.push_back(albertson_index(c.representative));
  // Classes are sorted by code, so the first extremum is the least code.
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[lo]) lo = i;
    if (values[i] > values[hi]) hi = i;
  }
  return ExtremalResult{Interpretation::FullRealizations,
                        values[lo],
                        values[hi],
                        classes[lo].representative,
                        classes[hi].representative,
                        classes.size()};
}

AdjacencyArrangement min_adjacency_arrangement(std::span<const int> multiset) {
  if (multiset.empty()) throw Error(ErrorKind::NoValidArrangement, "empty multiset");
  AdjacencyArrangement out{{multiset.begin(), multiset.end()}, 0};
  std::sort(out.arrangement.begin(), out.arrangement.end());
  out.adjacency_sum = out.arrangement.back() - out.arrangement.front();
  return out;
}

std::int64_t brute_force_min_adjacency(std::span<const int> multiset) {
  std::vector<int> p(multiset.begin(), multiset.end());
  std::sort(p.begin(), p.end());
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    std::int64_t s = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) s += std::abs(p[i] - p[i + 1]);
    best = std::min(best, s);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

GreedyComparison compare_greedy_to_bruteforce(const DegreeSequence& d, int max_order) {
  ExtremalResult r = extremal_over_realizations(d, max_order);
  GreedyComparison c;
  c.greedy_value = albertson_index(greedy_tree(d));
  c.brute_min = r.min_value;
  c.equal = c.greedy_value == c.brute_min;
  return c;
}

}  // namespace irrforge
