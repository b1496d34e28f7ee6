#include "irrforge/falsifier.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <tuple>

#include "irrforge/limits.hpp"

namespace irrforge {

const char* to_string(Family f) {
  switch (f) {
    case Family::AllTrees: return "AllTrees";
    case Family::Caterpillars: return "Caterpillars";
    case Family::RealizableSequences: return "RealizableSequences";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  if (text == "AllTrees" || text == "all-trees" || text == "trees") return Family::AllTrees;
  if (text == "Caterpillars" || text == "caterpillars") return Family::Caterpillars;
  if (text == "RealizableSequences" || text == "sequences") return Family::RealizableSequences;
  throw Error(ErrorKind::ParseError, "unknown family '" + text + "'");
}

Interpretation SearchSpace::effective_interpretation() const {
  if (interpretation) return *interpretation;
  return family == Family::Caterpillars ? Interpretation::CaterpillarArrangements
                                        : Interpretation::FullRealizations;
}

namespace {

void validate(const SearchSpace& space) {
  if (space.n_min < 1 || space.n_min > space.n_max)
    throw Error(ErrorKind::ParseError, "empty order range");
  if (space.n_max > kHardMaxOrder)
    throw Error(ErrorKind::CapExceeded, "scans are capped at n = " + std::to_string(kHardMaxOrder));
  if (space.family != Family::Caterpillars &&
      space.effective_interpretation() == Interpretation::CaterpillarArrangements)
    throw Error(ErrorKind::ParseError, "the arrangements interpretation needs the Caterpillars family");
}

bool within_degree_cap(const SearchSpace& space, const DegreeSequence& d) {
  return space.max_degree <= 0 || d[d.size() - 1] <= space.max_degree;
}

struct Extremes {
  std::int64_t min_value;
  std::int64_t max_value;
};

// Min/max irr per degree sequence over every tree of order n. Exact
// realization extremes without a Prüfer sweep per sequence.
std::map<DegreeSequence, Extremes> realization_extremes(const std::vector<Tree>& trees) {
  std::map<DegreeSequence, Extremes> out;
  for (const auto& t : trees) {
    auto irr = albertson_index(t);
    auto [it, fresh] = out.try_emplace(degree_sequence_of(t), Extremes{irr, irr});
    if (!fresh) {
      it->second.min_value = std::min(it->second.min_value, irr);
      it->second.max_value = std::max(it->second.max_value, irr);
    }
  }
  return out;
}

void set_extremes(Instance& inst, const Extremes& e, Interpretation interp) {
  inst.irr_min = e.min_value;
  inst.irr_max = e.max_value;
  inst.interpretation = interp;
}

// Spines of tree order n, one per reversal pair, entries capped.
void for_each_spine(int n, int max_entry, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> spine;
  for (int k = 2; k <= n; ++k) {
    // Excess over the minimum (1 at ends, 2 inside) sums to n − k.
    const int excess = n - k;
    spine.assign(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> place = [&](int pos, int left) {
      if (pos == k) {
        if (left != 0) return;
        std::vector<int> rev(spine.rbegin(), spine.rend());
        if (rev < spine) return;
        fn(spine);
        return;
      }
      const int floor_value = (pos == 0 || pos == k - 1) ? 1 : 2;
      for (int extra = 0; extra <= left; ++extra) {
        const int value = floor_value + extra;
        if (max_entry > 0 && value > max_entry) break;
        spine[pos] = value;
        place(pos + 1, left - extra);
      }
    };
    place(0, excess);
  }
}

std::optional<Extremes> arrangement_extremes(const BackboneArrangement& b,
                                             std::map<std::vector<int>, std::optional<Extremes>>& cache) {
  std::vector<int> key(b.spine().begin(), b.spine().end());
  std::sort(key.begin(), key.end());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::optional<Extremes> value;
  if (key.size() <= static_cast<std::size_t>(kMaxArrangementLength)) {
    auto r = extremal_over_arrangements_serial(key);
    value = Extremes{r.min_value, r.max_value};
  }
  cache.emplace(key, value);
  return value;
}

using SortKey = std::tuple<int, DegreeSequence, std::string, std::vector<int>>;

SortKey sort_key(const Instance& inst) {
  std::string code = inst.tree ? canonical_form(*inst.tree).bytes : std::string();
  std::vector<int> spine;
  if (inst.spine) spine.assign(inst.spine->spine().begin(), inst.spine->spine().end());
  return {inst.n, inst.degree_sequence, std::move(code), std::move(spine)};
}

}  // namespace

bool counterexample_less(const Instance& a, const Instance& b) { return sort_key(a) < sort_key(b); }

std::vector<Instance> generate_instances(const SearchSpace& space) {
  validate(space);
  const Interpretation interp = space.effective_interpretation();
  std::vector<std::pair<SortKey, Instance>> keyed;

  for (int n = space.n_min; n <= space.n_max; ++n) {
    switch (space.family) {
      case Family::AllTrees: {
        auto trees = all_unlabeled_trees(n);
        auto extremes = realization_extremes(trees);
        for (const auto& t : trees) {
          Instance inst = Instance::from_tree(t);
          if (!within_degree_cap(space, inst.degree_sequence)) continue;
          set_extremes(inst, extremes.at(inst.degree_sequence), interp);
          keyed.emplace_back(sort_key(inst), std::move(inst));
        }
        break;
      }
      case Family::RealizableSequences: {
        auto extremes = realization_extremes(all_unlabeled_trees(n));
        for (const auto& d : tree_degree_sequences(n)) {
          if (!within_degree_cap(space, d)) continue;
          Instance inst = Instance::from_sequence(d);
          set_extremes(inst, extremes.at(d), interp);
          keyed.emplace_back(sort_key(inst), std::move(inst));
        }
        break;
      }
      case Family::Caterpillars: {
        std::map<std::vector<int>, std::optional<Extremes>> cache;
        std::optional<std::map<DegreeSequence, Extremes>> realized;
        if (interp == Interpretation::FullRealizations) realized = realization_extremes(all_unlabeled_trees(n));
        for_each_spine(n, space.max_degree, [&](const std::vector<int>& spine) {
          BackboneArrangement b(spine);
          Instance inst = Instance::from_arrangement(b);
          if (!within_degree_cap(space, inst.degree_sequence)) return;
          if (realized) {
            set_extremes(inst, realized->at(inst.degree_sequence), interp);
          } else if (auto e = arrangement_extremes(b, cache)) {
            set_extremes(inst, *e, interp);
          }
          keyed.emplace_back(sort_key(inst), std::move(inst));
        });
        break;
      }
    }
  }

  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Instance> out;
  out.reserve(keyed.size());
  for (auto& [key, inst] : keyed) out.push_back(std::move(inst));
  return out;
}

ScanReport scan(const SearchSpace& space, const std::vector<std::string>& bound_ids, const EvalOptions& opt) {
  std::vector<const BoundRecord*> records;
  for (const auto& id : bound_ids) records.push_back(&lookup(id));
  EvalOptions options = opt;
  options.mode = space.mode;

  const std::vector<Instance> instances = generate_instances(space);
  const auto count = static_cast<std::int64_t>(instances.size());
  std::vector<std::vector<Verdict>> verdicts(instances.size());
  const int threads = space.workers > 0 ? space.workers : omp_get_max_threads();

#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    auto& row = verdicts[static_cast<std::size_t>(i)];
    row.reserve(records.size());
    for (const auto* r : records) row.push_back(evaluate_bound(*r, instances[static_cast<std::size_t>(i)], options));
  }

  ScanReport report;
  report.space = space;
  report.bound_ids = bound_ids;
  for (const auto& id : bound_ids) report.stats[id];
  for (std::size_t i = 0; i < instances.size(); ++i) {
    ++report.instances_per_order[instances[i].n];
    for (std::size_t b = 0; b < records.size(); ++b) {
      const Verdict& v = verdicts[i][b];
      BoundStats& s = report.stats[records[b]->id];
      switch (v.status) {
        case Status::Holds: ++s.holds; break;
        case Status::NotApplicable: ++s.not_applicable; break;
        case Status::Undefined: ++s.undefined; break;
        case Status::Violated:
          ++s.violated;
          if (!s.minimal_counterexample ||
              counterexample_less(instances[i], s.minimal_counterexample->instance))
            s.minimal_counterexample = Counterexample{records[b]->id, instances[i], v};
          break;
      }
    }
  }
  return report;
}

Instance rederive(const Instance& inst) {
  Instance out = inst.spine ? Instance::from_arrangement(*inst.spine)
                 : inst.tree ? Instance::from_tree(*inst.tree)
                             : Instance::from_sequence(inst.degree_sequence);
  out.lambda_min = inst.lambda_min;
  out.lambda_max = inst.lambda_max;
  if (!inst.interpretation) return out;
  if (*inst.interpretation == Interpretation::CaterpillarArrangements) {
    if (!out.spine) throw Error(ErrorKind::InvalidArrangement, "arrangement interpretation without a spine");
    if (out.spine->length() <= static_cast<std::size_t>(kMaxArrangementLength))
      out.with_extremal(extremal_over_arrangements(out.spine->spine()));
    else
      out.interpretation = Interpretation::CaterpillarArrangements;
  } else {
    out.with_extremal(extremal_over_realizations(out.degree_sequence, kHardMaxOrder));
  }
  return out;
}

bool reverifies(const Counterexample& c, const EvalOptions& opt) {
  EvalOptions options = opt;
  options.mode = c.verdict.mode;
  Verdict again = evaluate_bound(lookup(c.bound_id), rederive(c.instance), options);
  auto text = [](const std::optional<Quantity>& q) { return q ? q->to_string() : std::string(); };
  return again.status == c.verdict.status && text(again.lhs) == text(c.verdict.lhs) &&
         text(again.rhs) == text(c.verdict.rhs);
}

namespace {

// Structural neighbours obtained by deleting exactly one leaf, in a fixed
// order. Candidates are not yet re-derived.
std::vector<Instance> leaf_removals(const Instance& inst) {
  std::vector<Instance> out;
  auto keep = [&](Instance next) {
    next.interpretation = inst.interpretation;
    next.lambda_min = inst.lambda_min;
    next.lambda_max = inst.lambda_max;
    if (next.n >= 2) out.push_back(std::move(next));
  };
  if (inst.spine) {
    const auto& b = *inst.spine;
    const std::size_t k = b.length();
    std::vector<int> s(b.spine().begin(), b.spine().end());
    for (std::size_t i = 0; i < k; ++i) {
      // Drop one pendant at position i.
      std::vector<int> fewer = s;
      --fewer[i];
      if (BackboneArrangement::is_valid(fewer) && k >= 2)
        keep(Instance::from_arrangement(BackboneArrangement(fewer)));
    }
    if (k > 2 && s.front() == 1) {
      std::vector<int> shorter(s.begin() + 1, s.end());
      --shorter.front();
      if (BackboneArrangement::is_valid(shorter)) keep(Instance::from_arrangement(BackboneArrangement(shorter)));
    }
    if (k > 2 && s.back() == 1) {
      std::vector<int> shorter(s.begin(), s.end() - 1);
      --shorter.back();
      if (BackboneArrangement::is_valid(shorter)) keep(Instance::from_arrangement(BackboneArrangement(shorter)));
    }
  } else if (inst.tree) {
    for (Vertex leaf : inst.tree->leaves())
      if (inst.tree->order() > 2) keep(Instance::from_tree(remove_leaf(*inst.tree, leaf)));
  } else {
    auto d = inst.degree_sequence.degrees();
    if (d.size() > 2 && d.front() == 1) {
      int previous = 0;
      for (std::size_t j = 1; j < d.size(); ++j) {
        if (d[j] < 2 || d[j] == previous) continue;
        previous = d[j];
        std::vector<int> next(d.begin() + 1, d.end());
        --next[j - 1];
        keep(Instance::from_sequence(DegreeSequence(next)));
      }
    }
  }
  return out;
}

}  // namespace

Counterexample shrink(const Counterexample& c, const EvalOptions& opt) {
  if (c.verdict.status != Status::Violated)
    throw Error(ErrorKind::InputNotViolated, c.bound_id + " is not violated on this instance");
  EvalOptions options = opt;
  options.mode = c.verdict.mode;
  const BoundRecord& record = lookup(c.bound_id);
  Counterexample current = c;
  bool improved = true;
  while (improved) {
    improved = false;
    for (const Instance& candidate : leaf_removals(current.instance)) {
      Instance derived = rederive(candidate);
      Verdict v = evaluate_bound(record, derived, options);
      if (v.status == Status::Violated) {
        current = Counterexample{c.bound_id, std::move(derived), std::move(v)};
        improved = true;
        break;
      }
    }
  }
  return current;
}

}  // namespace irrforge
