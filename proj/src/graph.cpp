#include "irrforge/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "irrforge/limits.hpp"

namespace irrforge {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::CycleOrDisconnected: return "CycleOrDisconnected";
    case ErrorKind::InvalidDegreeSequence: return "InvalidDegreeSequence";
    case ErrorKind::InvalidArrangement: return "InvalidArrangement";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::NotSorted: return "NotSorted";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoValidArrangement: return "NoValidArrangement";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InputNotViolated: return "InputNotViolated";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

int enumeration_cap() {
  int cap = kDefaultMaxOrder;
  if (const char* env = std::getenv("IRRFORGE_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) cap = static_cast<int>(std::min<long>(v, kHardMaxOrder));
  }
  return cap;
}

// ---------------------------------------------------------------------------

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw Error(ErrorKind::InvalidDegreeSequence, "empty degree sequence");
  std::sort(degrees_.begin(), degrees_.end());
  bool single_isolated = degrees_.size() == 1 && degrees_[0] == 0;
  if (degrees_.front() < 1 && !single_isolated)
    throw Error(ErrorKind::InvalidDegreeSequence, "degrees must be >= 1");
}

std::int64_t DegreeSequence::sum() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
}

DegreeStats DegreeSequence::stats() const {
  DegreeStats s;
  const auto n = static_cast<std::int64_t>(degrees_.size());
  s.min_degree = degrees_.front();
  s.max_degree = degrees_.back();
  for (int d : degrees_) {
    s.sum += d;
    s.sum_sq += std::int64_t{d} * d;
    s.sum_cube += std::int64_t{d} * d * d;
  }
  s.lambda = Rational(BigInt(s.sum), BigInt(n));
  if (n >= 2) {
    s.alpha = Rational(BigInt(degrees_[0] + degrees_[1]), BigInt(2));
    s.beta = Rational(BigInt(degrees_[n - 2] + degrees_[n - 1]), BigInt(2));
  } else {
    s.alpha = s.beta = Rational(degrees_[0]);
  }
  s.edge_count_if_tree = static_cast<int>(n - 1);
  return s;
}

std::string DegreeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(degrees_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw Error(ErrorKind::BadIndex, "tree needs at least one vertex");
  for (auto& [u, v] : edges_) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw Error(ErrorKind::BadIndex,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range 1.." +
                      std::to_string(n_));
    if (u > v) std::swap(u, v);
  }
  if (edges_.size() != static_cast<std::size_t>(n_ - 1))
    throw Error(ErrorKind::CycleOrDisconnected,
                "expected " + std::to_string(n_ - 1) + " edges, got " + std::to_string(edges_.size()));
  DisjointSets sets(n_);
  for (const auto& [u, v] : edges_) {
    if (u == v || !sets.unite(u - 1, v - 1))
      throw Error(ErrorKind::CycleOrDisconnected, "edge set contains a cycle");
  }
  std::sort(edges_.begin(), edges_.end());

  degree_.assign(static_cast<std::size_t>(n_), 0);
  for (const auto& [u, v] : edges_) {
    ++degree_[u - 1];
    ++degree_[v - 1];
  }
  offset_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (int i = 0; i < n_; ++i) offset_[i + 1] = offset_[i] + degree_[i];
  adj_.assign(static_cast<std::size_t>(offset_[n_]), 0);
  std::vector<int> fill(offset_.begin(), offset_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_[fill[u - 1]++] = v;
    adj_[fill[v - 1]++] = u;
  }
}

std::vector<Vertex> Tree::leaves() const {
  std::vector<Vertex> out;
  for (int v = 1; v <= n_; ++v)
    if (degree_[v - 1] == 1) out.push_back(v);
  return out;
}

Tree make_tree(int n, std::vector<Edge> edges) { return Tree(n, std::move(edges)); }

std::int64_t albertson_index(const Tree& t) {
  std::int64_t total = 0;
  for (const auto& [u, v] : t.edges()) total += std::abs(t.degree(u) - t.degree(v));
  return total;
}

std::int64_t total_irregularity(const Tree& t) {
  // Sorted degrees: Σ_{i<j} (d_j − d_i) = Σ_j d_j (2j − n + 1) with 0-based j.
  std::vector<int> d(t.degrees().begin(), t.degrees().end());
  std::sort(d.begin(), d.end());
  std::int64_t total = 0;
  const auto n = static_cast<std::int64_t>(d.size());
  for (std::int64_t j = 0; j < n; ++j) total += d[j] * (2 * j - n + 1);
  return total;
}

std::int64_t variance_form(const Tree& t) {
  std::int64_t sum_sq = 0;
  for (int d : t.degrees()) sum_sq += std::int64_t{d} * d;
  const std::int64_t m = t.size();
  return t.order() * sum_sq - 4 * m * m;
}

std::int64_t sigma_index(const Tree& t) {
  std::int64_t total = 0;
  for (const auto& [u, v] : t.edges()) {
    std::int64_t diff = t.degree(u) - t.degree(v);
    total += diff * diff;
  }
  return total;
}

DegreeSequence degree_sequence_of(const Tree& t) {
  return DegreeSequence(std::vector<int>(t.degrees().begin(), t.degrees().end()));
}

bool is_tree_realizable(const DegreeSequence& d) {
  if (d.size() == 1) return d[0] == 0;
  if (d[0] < 1) return false;
  return d.sum() == 2 * (static_cast<std::int64_t>(d.size()) - 1);
}

Tree relabel(const Tree& t, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (const auto& [u, v] : t.edges()) edges.emplace_back(perm[u - 1], perm[v - 1]);
  return Tree(t.order(), std::move(edges));
}

Tree remove_leaf(const Tree& t, Vertex leaf) {
  if (t.order() < 2 || t.degree(leaf) != 1)
    throw Error(ErrorKind::BadIndex, "vertex " + std::to_string(leaf) + " is not a leaf");
  auto shift = [leaf](Vertex v) { return v > leaf ? v - 1 : v; };
  std::vector<Edge> edges;
  for (const auto& [u, v] : t.edges())
    if (u != leaf && v != leaf) edges.emplace_back(shift(u), shift(v));
  return Tree(t.order() - 1, std::move(edges));
}

}  // namespace irrforge
