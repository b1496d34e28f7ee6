#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "irrforge/bounds.hpp"
#include "irrforge/extremal.hpp"
#include "irrforge/treegen.hpp"

namespace irrforge {

enum class Family { AllTrees, Caterpillars, RealizableSequences };

const char* to_string(Family f);
Family parse_family(const std::string& text);

struct SearchSpace {
  Family family = Family::AllTrees;
  int n_min = 2;
  int n_max = 8;
  int max_degree = 0;  // 0: no cap
  // Unset means the family's natural reading: FullRealizations for trees and
  // sequences, CaterpillarArrangements for caterpillars.
  std::optional<Interpretation> interpretation;
  Mode mode = Mode::Literal;
  int workers = 0;

  Interpretation effective_interpretation() const;
};

struct Counterexample {
  std::string bound_id;
  Instance instance;
  Verdict verdict;
};

struct BoundStats {
  std::uint64_t holds = 0;
  std::uint64_t violated = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t undefined = 0;
  std::optional<Counterexample> minimal_counterexample;
};

struct ScanReport {
  SearchSpace space;
  std::vector<std::string> bound_ids;
  std::map<int, std::uint64_t> instances_per_order;
  std::map<std::string, BoundStats> stats;
};

// Instances the scan visits, in deterministic order.
std::vector<Instance> generate_instances(const SearchSpace& space);

ScanReport scan(const SearchSpace& space, const std::vector<std::string>& bound_ids,
                const EvalOptions& opt = {});

// Re-derives irr and the extremal values from the structural part (spine,
// tree or degree sequence) under the instance's own interpretation.
Instance rederive(const Instance& inst);
bool reverifies(const Counterexample& c, const EvalOptions& opt = {});

// Greedy leaf removal while the bound stays VIOLATED; never drops below two
// vertices. Throws InputNotViolated for a non-violating input.
Counterexample shrink(const Counterexample& c, const EvalOptions& opt = {});

// Total order used to pick the minimal counterexample: n, then degree
// sequence, then canonical code, then spine.
bool counterexample_less(const Instance& a, const Instance& b);

}  // namespace irrforge
