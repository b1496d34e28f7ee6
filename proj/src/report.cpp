#include "irrforge/report.hpp"

#include <algorithm>

#include "irrforge/caterpillar.hpp"
#include "irrforge/fixtures.hpp"
#include "irrforge/graph.hpp"

namespace irrforge {

const char* to_string(CellStatus s) { return s == CellStatus::Match ? "match" : "unreconciled"; }

std::size_t TableReport::count(CellStatus s) const {
  std::size_t total = 0;
  for (const auto& row : rows)
    total += static_cast<std::size_t>(
        std::count_if(row.cells.begin(), row.cells.end(), [&](const Cell& c) { return c.status == s; }));
  return total;
}

std::size_t TableReport::count(const std::string& column, CellStatus s) const {
  std::size_t total = 0;
  for (const auto& row : rows)
    for (const auto& c : row.cells)
      if (c.column == column && c.status == s) ++total;
  return total;
}

LValues compute_L_values(std::span<const int> seq, std::int64_t irr_min, std::int64_t m) {
  if (seq.size() != 5) throw Error(ErrorKind::WrongArity, "L values need five degrees");
  std::array<int, 5> d{};
  std::copy(seq.begin(), seq.end(), d.begin());
  std::sort(d.begin(), d.end());
  const std::int64_t delta = d[4];
  const std::int64_t den = delta * (delta - 1) * (delta - 1);
  if (den == 0) throw Error(ErrorKind::DegenerateDenominator, "Delta (Delta-1)^2 = 0");
  const Rational alpha(BigInt(d[0] + d[1]), BigInt(2));
  const Rational beta(BigInt(d[3] + d[4]), BigInt(2));
  if (alpha == 0) throw Error(ErrorKind::DegenerateDenominator, "alpha = 0");
  std::int64_t sum_sq = 0;
  for (int x : d) sum_sq += std::int64_t{x} * x;
  const Rational irr(BigInt{irr_min});
  const Rational edges(BigInt{m});
  LValues out;
  out.l1 = Rational(BigInt(2 * irr_min), BigInt(den));
  out.l2 = irr - Rational(BigInt(sum_sq + 2 * d[0] + d[1] - 3 * d[2] + 2 * (d[3] + d[4])));
  out.l3 = beta * edges * (edges + 1) / alpha + alpha * irr;
  return out;
}

bool matches_printed(const Rational& ours, const std::string& printed) {
  const auto dot = printed.find('.');
  const int places = dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
  std::string digits = printed;
  if (dot != std::string::npos) digits.erase(dot, 1);
  const BigInt printed_scaled(digits);
  const Rational scaled = ours * Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(places)));
  // Round half away from zero, as printed tables do.
  const BigInt rounded = scaled >= 0 ? floor_of(scaled + Rational(1, 2)) : -floor_of(-scaled + Rational(1, 2));
  return rounded == printed_scaled;
}

namespace {

Cell exact_cell(std::string column, const Rational& ours, const std::string& paper) {
  Cell c{std::move(column), to_display_string(ours), paper, CellStatus::Unreconciled, ""};
  if (ours == parse_fraction(paper.find('.') == std::string::npos ? paper : [&] {
        // "4.5" -> "45/10"
        std::string digits = paper;
        auto dot = digits.find('.');
        std::size_t places = digits.size() - dot - 1;
        digits.erase(dot, 1);
        return digits + "/1" + std::string(places, '0');
      }()))
    c.status = CellStatus::Match;
  else
    c.note = "value differs from the printed one";
  return c;
}

Cell rounded_cell(std::string column, const Rational& ours, const std::string& paper) {
  Cell c{std::move(column), to_display_string(ours), paper, CellStatus::Unreconciled, ""};
  if (matches_printed(ours, paper))
    c.status = CellStatus::Match;
  else
    c.note = "differs at the printed precision";
  return c;
}

Cell missing_cell(std::string column, const std::string& paper, std::string why) {
  return Cell{std::move(column), std::nullopt, paper, CellStatus::Unreconciled, std::move(why)};
}

struct ExtremalOutcome {
  std::optional<ExtremalResult> result;
  std::int64_t edges = 0;
  std::string why;
};

ExtremalOutcome extremal_for(const std::array<int, 5>& d, std::optional<Interpretation> interp) {
  ExtremalOutcome out;
  if (!interp) {
    out.why = "no interpretation selected";
    return out;
  }
  if (*interp == Interpretation::CaterpillarArrangements) {
    out.result = extremal_over_arrangements(d);
    out.edges = std::get<BackboneArrangement>(out.result->argmin).tree_order() - 1;
    return out;
  }
  DegreeSequence seq(std::vector<int>(d.begin(), d.end()));
  if (!is_tree_realizable(seq)) {
    out.why = "not a tree degree sequence (sum " + std::to_string(seq.sum()) + " != 2(n-1))";
    return out;
  }
  out.result = extremal_over_realizations(seq);
  out.edges = static_cast<std::int64_t>(seq.size()) - 1;
  return out;
}

std::string arrangement_note(const ExtremalOutcome& e) {
  return "irr_min " + std::to_string(e.result->min_value) + ", irr_max " + std::to_string(e.result->max_value) +
         ", m " + std::to_string(e.edges) + " (" + to_string(e.result->interpretation) + ")";
}

}  // namespace

std::vector<Finding> standing_findings() {
  std::vector<Finding> out;
  Tree star = conditioned_star(kStarFixtureParameter);
  out.push_back({"conditioned-star", std::to_string(albertson_index(star)), std::to_string(kStarEstimateFixture),
                 "conditioned star with t = " + std::to_string(kStarFixtureParameter) + " (" +
                     std::to_string(star.order()) + " vertices): computed irr vs printed estimate; unreconciled"});

  std::vector<int> spine{2, 4, 5, 7, 9};
  out.push_back({"caterpillar-vs-five-term",
                 std::to_string(closed_form_irr(BackboneArrangement(spine))),
                 std::to_string(lemma5_value(spine)),
                 "spine (2,4,5,7,9): caterpillar closed form (ours) vs five-term formula as printed; unreconciled"});

  Tree p4 = make_tree(4, {{1, 2}, {2, 3}, {3, 4}});
  out.push_back({"pairwise-forms-P4",
                 std::to_string(albertson_index(p4)),
                 std::to_string(total_irregularity(p4)) + " / " + std::to_string(variance_form(p4)),
                 "P4: edge sum (ours) vs all-pairs sum / n*sum(d^2)-4m^2, stated as equal; unreconciled"});
  return out;
}

TableReport reproduce_table2_alpha_beta() {
  TableReport report;
  report.table = 2;
  report.checksum_ok = fixture_checksum_ok();
  for (const auto& row : table2_fixture()) {
    RowReport r{row.degrees, {}, {}};
    const Rational alpha(BigInt(row.degrees[0] + row.degrees[1]), BigInt(2));
    const Rational beta(BigInt(row.degrees[3] + row.degrees[4]), BigInt(2));
    r.cells.push_back(exact_cell("alpha", alpha, row.alpha));
    r.cells.push_back(exact_cell("beta", beta, row.beta));
    report.rows.push_back(std::move(r));
  }
  return report;
}

TableReport reproduce_tables(int which, std::optional<Interpretation> interpretation) {
  if (which != 1 && which != 2) throw Error(ErrorKind::ParseError, "table must be 1 or 2");
  TableReport report;
  report.table = which;
  report.interpretation = interpretation;
  report.checksum_ok = fixture_checksum_ok();

  if (which == 1) {
    for (const auto& row : table1_fixture()) {
      RowReport r{row.degrees, {}, {}};
      ExtremalOutcome e = extremal_for(row.degrees, interpretation);
      if (e.result) {
        LValues l = compute_L_values(row.degrees, e.result->min_value, e.edges);
        r.cells.push_back(rounded_cell("L1", l.l1, row.l1));
        r.cells.push_back(rounded_cell("L2", l.l2, row.l2));
        r.cells.push_back(rounded_cell("L3", l.l3, row.l3));
        r.findings.push_back(arrangement_note(e));
      } else {
        for (auto [name, paper] : {std::pair{"L1", &row.l1}, {"L2", &row.l2}, {"L3", &row.l3}})
          r.cells.push_back(missing_cell(name, *paper, e.why));
      }
      report.rows.push_back(std::move(r));
    }
  } else {
    TableReport ab = reproduce_table2_alpha_beta();
    for (std::size_t i = 0; i < table2_fixture().size(); ++i) {
      const auto& row = table2_fixture()[i];
      RowReport r{row.degrees, {}, {}};
      ExtremalOutcome e = extremal_for(row.degrees, interpretation);
      if (e.result) {
        r.cells.push_back(exact_cell("irr_max", Rational(BigInt{e.result->max_value}), row.irr_max));
        r.cells.push_back(exact_cell("irr_min", Rational(BigInt{e.result->min_value}), row.irr_min));
        r.findings.push_back(arrangement_note(e));
      } else {
        r.cells.push_back(missing_cell("irr_max", row.irr_max, e.why));
        r.cells.push_back(missing_cell("irr_min", row.irr_min, e.why));
      }
      for (auto& c : ab.rows[i].cells) r.cells.push_back(std::move(c));
      if (std::stoll(row.irr_max) < std::stoll(row.irr_min))
        r.findings.push_back("max < min in fixture");
      report.rows.push_back(std::move(r));
    }
  }
  report.findings = standing_findings();
  return report;
}

}  // namespace irrforge
