#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "irrforge/graph.hpp"

namespace irrforge {

// Spine degrees of a caterpillar in path order. With two or more spine
// vertices the ends need degree >= 1 and internal vertices degree >= 2;
// a one-vertex spine is a star with spine[0] leaves.
class BackboneArrangement {
 public:
  explicit BackboneArrangement(std::vector<int> spine);  // throws InvalidArrangement

  std::size_t length() const { return spine_.size(); }
  int operator[](std::size_t i) const { return spine_[i]; }
  std::span<const int> spine() const { return spine_; }
  BackboneArrangement reversed() const;
  // Vertex count of the built caterpillar.
  int tree_order() const;
  std::string to_string() const;

  static bool is_valid(std::span<const int> spine);

  friend bool operator==(const BackboneArrangement&, const BackboneArrangement&) = default;
  friend auto operator<=>(const BackboneArrangement&, const BackboneArrangement&) = default;

 private:
  std::vector<int> spine_;
};

// Spine vertices get labels 1..k, pendants follow in spine order.
Tree build_caterpillar(const BackboneArrangement& b);

// (b_k−1)² + (b_1−1)² + Σ_internal (b_i−1)(b_i−2) + Σ |b_i − b_{i+1}|
// Requires a spine of length >= 2.
std::int64_t closed_form_irr(const BackboneArrangement& b);

// Five-entry evaluator, taken literally: the adjacent-difference sum runs
// over i = 2..4 only.
std::int64_t lemma5_value(std::span<const int> d);

// Center of degree t+1, each neighbor of degree t carrying t−1 leaves.
Tree conditioned_star(int t);

}  // namespace irrforge
