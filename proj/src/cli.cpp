#include "irrforge/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "irrforge/bounds.hpp"
#include "irrforge/caterpillar.hpp"
#include "irrforge/extremal.hpp"
#include "irrforge/falsifier.hpp"
#include "irrforge/fixtures.hpp"
#include "irrforge/limits.hpp"
#include "irrforge/report.hpp"
#include "irrforge/serialize.hpp"
#include "irrforge/text_io.hpp"
#include "irrforge/treegen.hpp"

namespace irrforge {

namespace {

void check_cap(std::size_t n, const std::string& what) {
  const int cap = enumeration_cap();
  if (static_cast<int>(n) > cap)
    throw Error(ErrorKind::TooLarge, what + " is capped at n = " + std::to_string(cap) +
                                         " (raise with IRRFORGE_MAX_N, at most " + std::to_string(kHardMaxOrder) +
                                         ")");
}

std::optional<Rational> parse_optional_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_fraction(text);
}

struct ComputeArgs {
  std::string file;
  std::string format = "text";
};

struct CaterpillarArgs {
  std::string backbone;
  bool closed_form = false;
  bool direct = false;
  bool both = false;
  bool edges = false;
};

struct EnumerateArgs {
  std::string degrees;
  bool labeled = false;
  bool unlabeled = false;
  bool count_only = false;
  int workers = 0;
};

struct ExtremalArgs {
  std::string degrees;
  std::string family;
  int workers = 0;
};

struct BoundsArgs {
  std::string degrees;
  std::string tree;
  std::string backbone;
  std::string bounds = "all";
  std::string mode = "literal";
  std::string format = "json";
  std::string interpretation;
  std::string lambda_min;
  std::string lambda_max;
  bool include_discontinuities = false;
};

struct FalsifyArgs {
  int max_n = 8;
  int min_n = 2;
  std::string family = "trees";
  std::string bounds = "all";
  std::string mode = "literal";
  std::string interpretation;
  std::string format = "json";
  int max_degree = 0;
  int workers = 0;
};

struct TablesArgs {
  int which = 1;
  std::string interpretation;
  std::string format = "md";
};

struct SeriesArgs {
  double n = 2.0;
  long terms = 200000;
};

int run_compute(const ComputeArgs& a, std::ostream& out) {
  Tree t = read_edge_list_file(a.file);
  if (a.format == "json") {
    Json j;
    j["n"] = t.order();
    j["m"] = t.size();
    j["degrees"] = degree_sequence_of(t).to_string();
    j["albertson"] = albertson_index(t);
    j["total_irregularity"] = total_irregularity(t);
    j["variance_form"] = variance_form(t);
    j["sigma"] = sigma_index(t);
    out << j.dump(2) << "\n";
  } else {
    out << "n " << t.order() << "\nm " << t.size() << "\nalbertson " << albertson_index(t)
        << "\ntotal_irregularity " << total_irregularity(t) << "\nvariance_form " << variance_form(t)
        << "\nsigma " << sigma_index(t) << "\n";
  }
  return kExitOk;
}

int run_caterpillar(const CaterpillarArgs& a, std::ostream& out) {
  BackboneArrangement b(parse_int_list(a.backbone));
  const bool want_closed = a.both || a.closed_form || !a.direct;
  const bool want_direct = a.both || a.direct || !a.closed_form;
  Tree t = build_caterpillar(b);
  if (want_closed) out << "closed-form " << closed_form_irr(b) << "\n";
  if (want_direct) out << "direct " << albertson_index(t) << "\n";
  if (a.edges) out << format_edge_list(t);
  return kExitOk;
}

int run_enumerate(const EnumerateArgs& a, std::ostream& out) {
  DegreeSequence d = parse_degree_sequence(a.degrees);
  if (!is_tree_realizable(d))
    throw Error(ErrorKind::NotRealizable, "(" + d.to_string() + ") is not a tree degree sequence");
  if (!a.unlabeled) {
    if (a.count_only) {
      out << count_labeled_trees(d) << "\n";
      return kExitOk;
    }
    check_cap(d.size(), "labeled listing");
    LabeledTreeStream stream(d);
    bool first = true;
    while (auto t = stream.next()) {
      if (!first) out << "\n";
      first = false;
      out << format_edge_list(*t);
    }
    return kExitOk;
  }
  check_cap(d.size(), "unlabeled enumeration");
  auto classes = unlabeled_classes(d, a.workers);
  if (a.count_only) {
    out << classes.size() << "\n";
    return kExitOk;
  }
  Json arr = Json::array();
  for (const auto& c : classes) {
    Json j;
    j["canonical"] = c.code.bytes;
    j["labeled_count"] = c.labeled_count;
    j["albertson"] = albertson_index(c.representative);
    j["edges"] = to_json(c.representative)["edges"];
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << "\n";
  return kExitOk;
}

int run_extremal(const ExtremalArgs& a, std::ostream& out) {
  const Interpretation interp = parse_interpretation(a.family);
  std::vector<int> values = parse_int_list(a.degrees);
  ExtremalResult r = [&] {
    if (interp == Interpretation::CaterpillarArrangements) return extremal_over_arrangements(values, a.workers);
    return extremal_over_realizations(DegreeSequence(values), enumeration_cap(), a.workers);
  }();
  out << to_json(r).dump(2) << "\n";
  return kExitOk;
}

int run_bounds(const BoundsArgs& a, std::ostream& out) {
  if (a.tree.empty() && a.degrees.empty() && a.backbone.empty())
    throw CLI::ValidationError("bounds", "one of --degrees, --tree or --backbone is required");

  std::optional<Interpretation> interp;
  if (!a.interpretation.empty()) interp = parse_interpretation(a.interpretation);

  Instance inst;
  if (!a.backbone.empty()) {
    BackboneArrangement b(parse_int_list(a.backbone));
    inst = Instance::from_arrangement(b);
    if (interp == Interpretation::CaterpillarArrangements) {
      std::vector<int> spine(b.spine().begin(), b.spine().end());
      inst.with_extremal(extremal_over_arrangements(spine));
    }
  } else if (!a.tree.empty()) {
    Tree t = read_edge_list_file(a.tree);
    inst = Instance::from_tree(t);
    if (!a.degrees.empty() && parse_degree_sequence(a.degrees) != inst.degree_sequence)
      throw Error(ErrorKind::InvalidDegreeSequence, "--degrees does not match the tree's degree sequence");
  } else {
    inst = Instance::from_sequence(parse_degree_sequence(a.degrees));
  }

  if (interp == Interpretation::FullRealizations) {
    check_cap(inst.degree_sequence.size(), "realization brute force");
    inst.with_extremal(extremal_over_realizations(inst.degree_sequence, enumeration_cap()));
  } else if (interp == Interpretation::CaterpillarArrangements && a.backbone.empty()) {
    throw Error(ErrorKind::ParseError, "the arrangements interpretation needs --backbone");
  }
  inst.lambda_min = parse_optional_rational(a.lambda_min);
  inst.lambda_max = parse_optional_rational(a.lambda_max);

  EvalOptions opt;
  opt.mode = parse_mode(a.mode);
  opt.include_discontinuities = a.include_discontinuities;

  std::vector<Verdict> verdicts;
  for (const auto& id : parse_bound_ids(a.bounds)) verdicts.push_back(evaluate_bound(lookup(id), inst, opt));

  if (a.format == "csv") {
    out << verdicts_csv(verdicts, inst);
  } else if (a.format == "md") {
    out << verdicts_markdown(verdicts, inst);
  } else {
    Json arr = Json::array();
    for (const auto& v : verdicts) arr.push_back(to_json(v, inst));
    out << arr.dump(2) << "\n";
  }
  return kExitOk;
}

int run_falsify(const FalsifyArgs& a, std::ostream& out) {
  SearchSpace space;
  space.family = parse_family(a.family);
  space.n_min = a.min_n;
  space.n_max = a.max_n;
  space.max_degree = a.max_degree;
  space.mode = parse_mode(a.mode);
  space.workers = a.workers;
  if (!a.interpretation.empty()) space.interpretation = parse_interpretation(a.interpretation);
  const int cap = enumeration_cap();
  if (a.max_n > cap)
    throw Error(ErrorKind::CapExceeded, "scans are capped at n = " + std::to_string(cap) +
                                            " (raise with IRRFORGE_MAX_N, at most " +
                                            std::to_string(kHardMaxOrder) + ")");
  EvalOptions opt;
  opt.mode = space.mode;
  ScanReport r = scan(space, parse_bound_ids(a.bounds), opt);
  if (a.format == "md")
    out << scan_markdown(r);
  else
    out << to_json(r).dump(2) << "\n";
  return kExitOk;
}

int run_tables(const TablesArgs& a, std::ostream& out, std::ostream& err) {
  if (!fixture_checksum_ok()) {
    err << "embedded fixture checksum mismatch: " << std::hex << fixture_checksum() << "\n";
    return kExitInvalid;
  }
  std::optional<Interpretation> interp;
  if (!a.interpretation.empty()) interp = parse_interpretation(a.interpretation);
  TableReport r = reproduce_tables(a.which, interp);
  if (a.format == "json")
    out << to_json(r).dump(2) << "\n";
  else
    out << table_markdown(r);
  return kExitOk;
}

int run_series(const SeriesArgs& a, std::ostream& out) {
  if (a.terms < 1) throw Error(ErrorKind::ParseError, "--terms must be positive");
  const double lhs = series_lhs(a.n);
  const double rhs = series_rhs(a.n, a.terms);
  std::ostringstream s;
  s << std::setprecision(10);
  s << "n " << a.n << "\nterms " << a.terms << "\nlhs " << lhs << "\nrhs " << rhs << "\ndifference "
    << std::fabs(lhs - rhs) << "\ndistance_to_discontinuity " << distance_to_discontinuity(a.n) << "\n";
  out << s.str();
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"irrforge: irregularity indices of trees, bound verification and counterexample search"};
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags; flags win");
  app.require_subcommand(1);

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "All four irregularity indices of an edge-list tree");
  compute->add_option("file", compute_args.file, "Edge-list file: n, then n-1 lines 'u v'")->required();
  compute->add_option("--format", compute_args.format)->check(CLI::IsMember({"text", "json"}));

  CaterpillarArgs cat_args;
  auto* cat = app.add_subcommand("caterpillar", "Albertson index of a caterpillar backbone");
  cat->add_option("--backbone", cat_args.backbone, "Spine degrees in path order, e.g. 2,4,5,7,9")->required();
  auto* cf = cat->add_flag("--closed-form", cat_args.closed_form);
  auto* dr = cat->add_flag("--direct", cat_args.direct);
  auto* bo = cat->add_flag("--both", cat_args.both);
  cf->excludes(dr)->excludes(bo);
  dr->excludes(bo);
  cat->add_flag("--edges", cat_args.edges, "Also print the caterpillar's edge list");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Trees realizing a degree sequence");
  enumerate->add_option("--degrees", enum_args.degrees)->required();
  auto* lab = enumerate->add_flag("--labeled", enum_args.labeled);
  auto* unl = enumerate->add_flag("--unlabeled", enum_args.unlabeled);
  lab->excludes(unl);
  enumerate->add_flag("--count-only", enum_args.count_only);
  enumerate->add_option("--workers", enum_args.workers)->check(CLI::NonNegativeNumber);

  ExtremalArgs ext_args;
  auto* extremal = app.add_subcommand("extremal", "Exact irr_min / irr_max for one interpretation");
  extremal->add_option("--degrees", ext_args.degrees, "Spine multiset or degree sequence")->required();
  extremal->add_option("--family", ext_args.family)
      ->required()
      ->check(CLI::IsMember({"arrangements", "realizations"}));
  extremal->add_option("--workers", ext_args.workers)->check(CLI::NonNegativeNumber);

  BoundsArgs b_args;
  auto* bounds = app.add_subcommand("bounds", "Evaluate catalog inequalities on one instance");
  bounds->add_option("--degrees", b_args.degrees);
  bounds->add_option("--tree", b_args.tree, "Edge-list file");
  bounds->add_option("--backbone", b_args.backbone, "Caterpillar spine in path order");
  bounds->add_option("--bounds", b_args.bounds, "Comma-separated ids or 'all'");
  bounds->add_option("--mode", b_args.mode)->check(CLI::IsMember({"literal", "proof"}));
  bounds->add_option("--format", b_args.format)->check(CLI::IsMember({"json", "csv", "md"}));
  bounds->add_option("--interpretation", b_args.interpretation, "arrangements or realizations")
      ->check(CLI::IsMember({"arrangements", "realizations"}));
  bounds->add_option("--lambda-min", b_args.lambda_min, "Override for the chain bound, e.g. 3/2");
  bounds->add_option("--lambda-max", b_args.lambda_max);
  bounds->add_flag("--include-discontinuities", b_args.include_discontinuities);

  FalsifyArgs f_args;
  auto* falsify = app.add_subcommand("falsify", "Exhaustive counterexample scan");
  falsify->add_option("--max-n", f_args.max_n)->required()->check(CLI::PositiveNumber);
  falsify->add_option("--min-n", f_args.min_n)->check(CLI::PositiveNumber);
  falsify->add_option("--family", f_args.family)->check(CLI::IsMember({"trees", "caterpillars", "sequences"}));
  falsify->add_option("--bounds", f_args.bounds);
  falsify->add_option("--mode", f_args.mode)->check(CLI::IsMember({"literal", "proof"}));
  falsify->add_option("--interpretation", f_args.interpretation)
      ->check(CLI::IsMember({"arrangements", "realizations"}));
  falsify->add_option("--max-degree", f_args.max_degree)->check(CLI::NonNegativeNumber);
  falsify->add_option("--workers", f_args.workers)->check(CLI::NonNegativeNumber);
  falsify->add_option("--format", f_args.format)->check(CLI::IsMember({"json", "md"}));

  TablesArgs t_args;
  auto* tables = app.add_subcommand("tables", "Recompute the printed tables and flag discrepancies");
  tables->add_option("--which", t_args.which)->required()->check(CLI::IsMember({1, 2}));
  tables->add_option("--interpretation", t_args.interpretation)
      ->check(CLI::IsMember({"arrangements", "realizations"}));
  tables->add_option("--format", t_args.format)->check(CLI::IsMember({"md", "json"}));

  SeriesArgs s_args;
  auto* series = app.add_subcommand("series", "Truncated Fourier series against its floor/ceiling form");
  series->add_option("--n", s_args.n)->required();
  series->add_option("--terms", s_args.terms);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return run_compute(compute_args, out);
    if (cat->parsed()) return run_caterpillar(cat_args, out);
    if (enumerate->parsed()) return run_enumerate(enum_args, out);
    if (extremal->parsed()) return run_extremal(ext_args, out);
    if (bounds->parsed()) return run_bounds(b_args, out);
    if (falsify->parsed()) return run_falsify(f_args, out);
    if (tables->parsed()) return run_tables(t_args, out, err);
    if (series->parsed()) return run_series(s_args, out);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.is_cap() ? kExitCap : kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace irrforge
