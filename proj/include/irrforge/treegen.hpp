#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "irrforge/graph.hpp"

namespace irrforge {

struct PruferCode {
  int n = 2;
  std::vector<Vertex> entries;  // length n − 2

  friend bool operator==(const PruferCode&, const PruferCode&) = default;
};

Tree prufer_decode(const PruferCode& code);  // throws BadLabel
PruferCode prufer_encode(const Tree& t);     // requires n >= 2

// Labeled trees in which vertex i has degree d[i-1] (sorted assignment).
std::uint64_t count_labeled_trees(const DegreeSequence& d);

// Lexicographic stream over the Prüfer multiset in which label i appears
// d_i − 1 times. Single consumer; O(n) state.
class LabeledTreeStream {
 public:
  explicit LabeledTreeStream(const DegreeSequence& d);
  std::optional<Tree> next();

 private:
  int n_;
  std::vector<Vertex> code_;
  bool done_ = false;
};

std::vector<Tree> enumerate_labeled_trees(const DegreeSequence& d);

// Isomorphism-invariant code: AHU encoding rooted at the center, or at the
// central edge with the two halves ordered.
struct CanonicalCode {
  std::string bytes;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_form(const Tree& t);

struct UnlabeledClass {
  CanonicalCode code;
  Tree representative;     // lexicographically first labeled tree of the class
  std::uint64_t labeled_count = 0;  // labeled realizations in the class
};

// One class per isomorphism type, sorted by code. The OpenMP version splits
// the lexicographic Prüfer range across `workers` (0 = runtime default) and
// merges by least rank, so the output does not depend on the worker count.
std::vector<UnlabeledClass> unlabeled_classes(const DegreeSequence& d, int workers = 0);
std::vector<UnlabeledClass> unlabeled_classes_serial(const DegreeSequence& d);

std::vector<Tree> enumerate_unlabeled_trees(const DegreeSequence& d, int workers = 0);

// BFS greedy construction, largest degrees nearest the root.
Tree greedy_tree(const DegreeSequence& d);

Tree random_tree(const DegreeSequence& d, std::uint64_t seed);

// All realizable degree sequences of order n, lexicographic.
std::vector<DegreeSequence> tree_degree_sequences(int n);

// Every unlabeled tree of order n by leaf extension of order n−1 trees,
// deduplicated by canonical code and sorted by it.
std::vector<Tree> all_unlabeled_trees(int n);

}  // namespace irrforge
