#include "irrforge/caterpillar.hpp"

#include <algorithm>
#include <cstdlib>

namespace irrforge {

bool BackboneArrangement::is_valid(std::span<const int> spine) {
  if (spine.empty()) return false;
  if (spine.size() == 1) return spine[0] >= 0;
  if (spine.front() < 1 || spine.back() < 1) return false;
  return std::all_of(spine.begin() + 1, spine.end() - 1, [](int b) { return b >= 2; });
}

BackboneArrangement::BackboneArrangement(std::vector<int> spine) : spine_(std::move(spine)) {
  if (!is_valid(spine_))
    throw Error(ErrorKind::InvalidArrangement,
                "spine (" + to_string() + "): ends need degree >= 1, internal vertices >= 2");
}

BackboneArrangement BackboneArrangement::reversed() const {
  return BackboneArrangement(std::vector<int>(spine_.rbegin(), spine_.rend()));
}

int BackboneArrangement::tree_order() const {
  if (spine_.size() == 1) return 1 + spine_[0];
  int order = static_cast<int>(spine_.size());
  order += spine_.front() - 1 + spine_.back() - 1;
  for (std::size_t i = 1; i + 1 < spine_.size(); ++i) order += spine_[i] - 2;
  return order;
}

std::string BackboneArrangement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < spine_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spine_[i]);
  }
  return out;
}

Tree build_caterpillar(const BackboneArrangement& b) {
  const int k = static_cast<int>(b.length());
  std::vector<Edge> edges;
  for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
  int next = k + 1;
  for (int i = 0; i < k; ++i) {
    int spine_neighbors = k == 1 ? 0 : (i == 0 || i == k - 1 ? 1 : 2);
    for (int p = 0; p < b[i] - spine_neighbors; ++p) edges.emplace_back(i + 1, next++);
  }
  return Tree(next - 1, std::move(edges));
}

std::int64_t closed_form_irr(const BackboneArrangement& b) {
  const std::size_t k = b.length();
  if (k < 2) throw Error(ErrorKind::InvalidArrangement, "closed form needs a spine of length >= 2");
  auto sq = [](std::int64_t x) { return x * x; };
  std::int64_t total = sq(b[k - 1] - 1) + sq(b[0] - 1);
  for (std::size_t i = 1; i + 1 < k; ++i) total += std::int64_t{b[i] - 1} * (b[i] - 2);
  for (std::size_t i = 0; i + 1 < k; ++i) total += std::abs(b[i] - b[i + 1]);
  return total;
}

std::int64_t lemma5_value(std::span<const int> d) {
  if (d.size() != 5) throw Error(ErrorKind::WrongArity, "expected 5 entries, got " + std::to_string(d.size()));
  if (!std::is_sorted(d.begin(), d.end())) throw Error(ErrorKind::NotSorted, "entries must be non-decreasing");
  std::int64_t total = std::int64_t{d[0]} * d[0] + std::int64_t{d[4]} * d[4];
  for (std::size_t i = 1; i <= 3; ++i) total += std::abs(d[i] - d[i + 1]);
  for (std::size_t i = 1; i <= 3; ++i) total += std::int64_t{d[i] + 2} * (d[i] - 1);
  return total - 2;
}

Tree conditioned_star(int t) {
  if (t < 1) throw Error(ErrorKind::InvalidArrangement, "conditioned star needs t >= 1");
  std::vector<Edge> edges;
  int next = 2;
  std::vector<Vertex> ring;
  for (int i = 0; i <= t; ++i) {
    ring.push_back(next);
    edges.emplace_back(1, next++);
  }
  for (Vertex v : ring)
    for (int leaf = 0; leaf < t - 1; ++leaf) edges.emplace_back(v, next++);
  return Tree(next - 1, std::move(edges));
}

}  // namespace irrforge
