#include "irrforge/treegen.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "irrforge/multiset_perm.hpp"

namespace irrforge {

namespace {

Tree single_vertex() { return Tree(1, {}); }

void require_realizable(const DegreeSequence& d) {
  if (!is_tree_realizable(d))
    throw Error(ErrorKind::NotRealizable, "(" + d.to_string() + ") is not a tree degree sequence");
}

// Label i (1-based, i-th smallest degree) appears d_i − 1 times.
std::vector<Vertex> prufer_multiset(const DegreeSequence& d) {
  std::vector<Vertex> items;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (int k = 1; k < d[i]; ++k) items.push_back(static_cast<Vertex>(i + 1));
  return items;
}

Tree decode_unchecked(int n, std::span<const Vertex> code) {
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (Vertex v : code) ++degree[v];
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  int ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (Vertex v : code) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n);
  return Tree(n, std::move(edges));
}

int workers_or_default(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

std::string ahu_code(const Tree& t, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex w : t.neighbors(v))
    if (w != parent) children.push_back(ahu_code(t, w, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

std::vector<Vertex> centers(const Tree& t) {
  const int n = t.order();
  if (n == 1) return {1};
  std::vector<int> degree(t.degrees().begin(), t.degrees().end());
  std::vector<Vertex> layer = t.leaves();
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf))
        if (--degree[w - 1] == 1) next.push_back(w);
      degree[leaf - 1] = 0;
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

Tree prufer_decode(const PruferCode& code) {
  if (code.n < 2) throw Error(ErrorKind::BadLabel, "Prüfer codes need n >= 2");
  if (code.entries.size() != static_cast<std::size_t>(code.n - 2))
    throw Error(ErrorKind::BadLabel, "code length must be n − 2");
  for (Vertex v : code.entries)
    if (v < 1 || v > code.n)
      throw Error(ErrorKind::BadLabel, "label " + std::to_string(v) + " outside 1.." + std::to_string(code.n));
  return decode_unchecked(code.n, code.entries);
}

PruferCode prufer_encode(const Tree& t) {
  const int n = t.order();
  if (n < 2) throw Error(ErrorKind::BadLabel, "Prüfer codes need n >= 2");
  // Parent pointers toward the root n.
  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> stack{n};
  parent[n] = n;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : t.neighbors(v))
      if (parent[w] == 0) {
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) degree[v] = t.degree(v);
  PruferCode code{n, {}};
  code.entries.reserve(static_cast<std::size_t>(n) - 2);
  int ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < n - 2; ++i) {
    Vertex next = parent[leaf];
    code.entries.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return code;
}

std::uint64_t count_labeled_trees(const DegreeSequence& d) {
  require_realizable(d);
  if (d.size() <= 2) return 1;
  return multiset_permutation_count(prufer_multiset(d));
}

LabeledTreeStream::LabeledTreeStream(const DegreeSequence& d) : n_(static_cast<int>(d.size())) {
  require_realizable(d);
  code_ = prufer_multiset(d);
}

std::optional<Tree> LabeledTreeStream::next() {
  if (done_) return std::nullopt;
  if (n_ == 1) {
    done_ = true;
    return single_vertex();
  }
  Tree t = decode_unchecked(n_, code_);
  done_ = !std::next_permutation(code_.begin(), code_.end());
  return t;
}

std::vector<Tree> enumerate_labeled_trees(const DegreeSequence& d) {
  std::vector<Tree> out;
  LabeledTreeStream stream(d);
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

CanonicalCode canonical_form(const Tree& t) {
  auto c = centers(t);
  if (c.size() == 1) return {"U" + ahu_code(t, c[0], 0)};
  std::string a = ahu_code(t, c[0], c[1]);
  std::string b = ahu_code(t, c[1], c[0]);
  if (b < a) std::swap(a, b);
  return {"B" + a + b};
}

namespace {

struct ClassEntry {
  std::uint64_t first_rank;
  Tree representative;
  std::uint64_t count;
};

using ClassMap = std::map<CanonicalCode, ClassEntry>;

void merge_into(ClassMap& into, ClassMap&& from) {
  for (auto& [code, entry] : from) {
    auto it = into.find(code);
    if (it == into.end()) {
      into.emplace(code, std::move(entry));
    } else {
      it->second.count += entry.count;
      if (entry.first_rank < it->second.first_rank) {
        it->second.first_rank = entry.first_rank;
        it->second.representative = std::move(entry.representative);
      }
    }
  }
}

void scan_range(int n, std::span<const Vertex> items, std::uint64_t begin, std::uint64_t end,
                ClassMap& out) {
  if (begin >= end) return;
  std::vector<Vertex> code = unrank_multiset_permutation(items, begin);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    Tree t = decode_unchecked(n, code);
    CanonicalCode cc = canonical_form(t);
    auto it = out.find(cc);
    if (it == out.end())
      out.emplace(std::move(cc), ClassEntry{rank, std::move(t), 1});
    else
      ++it->second.count;
    std::next_permutation(code.begin(), code.end());
  }
}

std::vector<UnlabeledClass> flatten(ClassMap&& classes) {
  std::vector<UnlabeledClass> out;
  out.reserve(classes.size());
  for (auto& [code, entry] : classes)
    out.push_back({code, std::move(entry.representative), entry.count});
  return out;
}

}  // namespace

std::vector<UnlabeledClass> unlabeled_classes_serial(const DegreeSequence& d) {
  require_realizable(d);
  if (d.size() == 1) return {{canonical_form(single_vertex()), single_vertex(), 1}};
  ClassMap classes;
  std::uint64_t rank = 0;
  LabeledTreeStream stream(d);
  while (auto t = stream.next()) {
    CanonicalCode cc = canonical_form(*t);
    auto it = classes.find(cc);
    if (it == classes.end())
      classes.emplace(std::move(cc), ClassEntry{rank, std::move(*t), 1});
    else
      ++it->second.count;
    ++rank;
  }
  return flatten(std::move(classes));
}

std::vector<UnlabeledClass> unlabeled_classes(const DegreeSequence& d, int workers) {
  require_realizable(d);
  if (d.size() == 1) return unlabeled_classes_serial(d);
  const int n = static_cast<int>(d.size());
  const std::vector<Vertex> items = prufer_multiset(d);
  const std::uint64_t total = multiset_permutation_count(items);
  const int threads = workers_or_default(workers);
  const auto bounds = chunk_bounds(total, static_cast<std::uint64_t>(threads) * 8);
  const auto chunks = static_cast<std::int64_t>(bounds.size() - 1);
  std::vector<ClassMap> partial(static_cast<std::size_t>(chunks));

#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c)
    scan_range(n, items, bounds[c], bounds[c + 1], partial[c]);

  ClassMap merged;
  for (auto& p : partial) merge_into(merged, std::move(p));
  return flatten(std::move(merged));
}

std::vector<Tree> enumerate_unlabeled_trees(const DegreeSequence& d, int workers) {
  std::vector<Tree> out;
  for (auto& c : unlabeled_classes(d, workers)) out.push_back(std::move(c.representative));
  return out;
}

Tree greedy_tree(const DegreeSequence& d) {
  require_realizable(d);
  const int n = static_cast<int>(d.size());
  if (n == 1) return single_vertex();
  // Labels follow non-increasing degree, so "largest-degree frontier vertex,
  // earliest created on ties" is simply the smallest label with open slots.
  std::vector<int> deg(d.degrees().rbegin(), d.degrees().rend());
  std::vector<Edge> edges;
  int created = 1;
  for (int v = 1; v <= n && created < n; ++v) {
    int slots = v == 1 ? deg[0] : deg[v - 1] - 1;
    for (int s = 0; s < slots && created < n; ++s) edges.emplace_back(v, ++created);
  }
  return Tree(n, std::move(edges));
}

Tree random_tree(const DegreeSequence& d, std::uint64_t seed) {
  require_realizable(d);
  const int n = static_cast<int>(d.size());
  if (n == 1) return single_vertex();
  std::vector<Vertex> code = prufer_multiset(d);
  std::mt19937_64 rng(seed);
  for (std::size_t i = code.size(); i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(code[i - 1], code[pick(rng)]);
  }
  return decode_unchecked(n, code);
}

std::vector<DegreeSequence> tree_degree_sequences(int n) {
  if (n < 1) return {};
  if (n == 1) return {DegreeSequence({0})};
  std::vector<DegreeSequence> out;
  std::vector<int> current;
  const int target = 2 * (n - 1);
  std::function<void(int, int)> extend = [&](int min_degree, int remaining_sum) {
    const int remaining_slots = n - static_cast<int>(current.size());
    if (remaining_slots == 0) {
      if (remaining_sum == 0) out.emplace_back(current);
      return;
    }
    for (int deg = min_degree; deg * remaining_slots <= remaining_sum; ++deg) {
      current.push_back(deg);
      extend(deg, remaining_sum - deg);
      current.pop_back();
    }
  };
  extend(1, target);
  return out;
}

std::vector<Tree> all_unlabeled_trees(int n) {
  if (n < 1) return {};
  std::map<CanonicalCode, Tree> level;
  level.emplace(canonical_form(single_vertex()), single_vertex());
  for (int order = 2; order <= n; ++order) {
    std::map<CanonicalCode, Tree> next;
    for (const auto& [code, t] : level) {
      for (Vertex v = 1; v <= t.order(); ++v) {
        std::vector<Edge> edges = t.edges();
        edges.emplace_back(v, order);
        Tree grown(order, std::move(edges));
        next.try_emplace(canonical_form(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Tree> out;
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

}  // namespace irrforge
