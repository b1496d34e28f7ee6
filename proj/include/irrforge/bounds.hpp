#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irrforge/caterpillar.hpp"
#include "irrforge/exact.hpp"
#include "irrforge/extremal.hpp"
#include "irrforge/graph.hpp"

namespace irrforge {

// Everything a catalog entry may need. Absent optionals make the entries
// that need them NOT_APPLICABLE.
struct Instance {
  DegreeSequence degree_sequence{std::vector<int>{1, 1}};
  std::optional<Tree> tree;
  std::optional<BackboneArrangement> spine;
  int n = 0;
  int m = 0;
  DegreeStats stats;
  std::optional<std::int64_t> irr;
  std::optional<std::int64_t> irr_min;
  std::optional<std::int64_t> irr_max;
  std::optional<Interpretation> interpretation;
  std::optional<Rational> lambda_min;  // defaults to λ when unset
  std::optional<Rational> lambda_max;

  static Instance from_tree(const Tree& t);
  static Instance from_arrangement(const BackboneArrangement& b);
  // No tree: edge count taken as n − 1.
  static Instance from_sequence(const DegreeSequence& d);

  Instance& with_extremal(const ExtremalResult& r);
};

enum class Relation { Less, LessEqual, Greater, GreaterEqual, Equal, Chain };
enum class Target { Irr, IrrMin, IrrMax, Identity };
enum class Mode { Literal, Proof };
enum class Status { Holds, Violated, NotApplicable, Undefined };

const char* to_string(Relation r);
const char* to_string(Target t);
const char* to_string(Mode m);
const char* to_string(Status s);
Mode parse_mode(const std::string& text);

struct BoundRecord {
  std::string id;
  std::string location;
  std::string quote;
  Relation relation;
  std::string applicability;        // literal-mode predicate, human readable
  std::string proof_preconditions;  // extra predicate used in proof mode
  Target target;
  std::string statement;
};

// A bound side: exact where possible; the series entry is only approximate.
struct Quantity {
  std::optional<Surd> exact;
  double approx = 0.0;

  static Quantity of(const Surd& s) { return {s, s.approx()}; }
  static Quantity real(double v) { return {std::nullopt, v}; }
  std::string to_string() const;
};

struct Link {
  Quantity lhs;
  Relation relation;
  Quantity rhs;
  bool holds = false;
};

struct Verdict {
  std::string bound_id;
  Status status = Status::NotApplicable;
  std::optional<Quantity> lhs;
  std::optional<Quantity> rhs;
  Mode mode = Mode::Literal;
  std::string reason;  // why NOT_APPLICABLE / UNDEFINED, empty otherwise
  std::vector<Link> links;  // chains only
  std::vector<std::pair<std::string, std::string>> params;

  // rhs − lhs; exact string when both sides are rational.
  std::string slack_string() const;
  std::optional<double> slack_approx() const;
};

struct EvalOptions {
  Mode mode = Mode::Literal;
  bool include_discontinuities = false;
  int series_terms = 200000;
  double series_tolerance = 5e-3;
  double discontinuity_margin = 0.05;
};

const std::vector<BoundRecord>& catalog();
const BoundRecord& lookup(std::string_view id);  // throws ParseError on unknown id
std::vector<std::string> parse_bound_ids(const std::string& text);  // "B01,B14" or "all"

Verdict evaluate_bound(const BoundRecord& r, const Instance& inst, const EvalOptions& opt = {});
std::vector<Verdict> evaluate_all(const Instance& inst, const EvalOptions& opt = {});

// ⌊2n/3⌋ + ⌈(2n+1)/3⌉ for real n.
double series_lhs(double n);
// 5/6 + 2n/3 + ⌊2n/3⌋ + (1/π) Σ_{k=1}^{K} sin((2πk + 4πnk)/3) / k
double series_rhs(double n, long terms);
// Distance from n to the nearest jump of either floor/ceiling term.
double distance_to_discontinuity(double n);

}  // namespace irrforge
