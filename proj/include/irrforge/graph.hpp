#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "irrforge/error.hpp"
#include "irrforge/rational.hpp"

namespace irrforge {

using Vertex = int;                      // 1-based label
using Edge = std::pair<Vertex, Vertex>;  // unordered; stored with first < second

struct DegreeStats {
  int max_degree = 0;  // Δ
  int min_degree = 0;  // δ
  Rational lambda;     // average degree
  Rational alpha;      // (d1 + d2) / 2
  Rational beta;       // (d_{n-1} + d_n) / 2
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  std::int64_t sum_cube = 0;
  int edge_count_if_tree = 0;
};

// Sorted (non-decreasing) degree multiset. Degrees are >= 1, except that the
// single-vertex tree is described by the one-entry sequence (0).
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> degrees);

  std::size_t size() const { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  std::span<const int> degrees() const { return degrees_; }
  std::int64_t sum() const;
  DegreeStats stats() const;
  std::string to_string() const;  // "1,1,2,2"

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

class Tree {
 public:
  // Throws Error{BadIndex | CycleOrDisconnected}.
  Tree(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return n_ - 1; }
  const std::vector<Edge>& edges() const { return edges_; }
  int degree(Vertex v) const { return degree_[v - 1]; }
  std::span<const int> degrees() const { return degree_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offset_[v - 1], adj_.data() + offset_[v]};
  }
  std::vector<Vertex> leaves() const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;  // sorted
  std::vector<int> degree_;
  std::vector<int> offset_;
  std::vector<Vertex> adj_;
};

Tree make_tree(int n, std::vector<Edge> edges);

// Σ_{uv∈E} |deg u − deg v|
std::int64_t albertson_index(const Tree& t);
// Σ over all unordered vertex pairs of |deg u − deg v|
std::int64_t total_irregularity(const Tree& t);
// n·Σ deg² − 4m²
std::int64_t variance_form(const Tree& t);
// Σ_{uv∈E} (deg u − deg v)²
std::int64_t sigma_index(const Tree& t);

DegreeSequence degree_sequence_of(const Tree& t);
bool is_tree_realizable(const DegreeSequence& d);

// Copy of t with vertex v renamed to perm[v-1].
Tree relabel(const Tree& t, std::span<const Vertex> perm);
// Removes leaf v and closes the label gap.
Tree remove_leaf(const Tree& t, Vertex leaf);

}  // namespace irrforge
