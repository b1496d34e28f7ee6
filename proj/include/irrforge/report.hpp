#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irrforge/extremal.hpp"
#include "irrforge/rational.hpp"

namespace irrforge {

struct LValues {
  Rational l1;  // 2·irr_min / (Δ(Δ−1)²)
  Rational l2;  // irr_min − (Σd² + 2d1 + d2 − 3d3 + 2(d4 + d5))
  Rational l3;  // βm(m+1)/α + α·irr_min
};

// `seq` holds five degrees (sorted internally); m is the edge count of the
// chosen interpretation. Throws DegenerateDenominator.
LValues compute_L_values(std::span<const int> seq, std::int64_t irr_min, std::int64_t m);

enum class CellStatus { Match, Unreconciled };
const char* to_string(CellStatus s);

struct Cell {
  std::string column;
  std::optional<std::string> ours;  // absent when not computable
  std::string paper;
  CellStatus status = CellStatus::Unreconciled;
  std::string note;
};

struct RowReport {
  std::array<int, 5> degrees;
  std::vector<Cell> cells;
  std::vector<std::string> findings;
};

struct Finding {
  std::string id;
  std::string ours;
  std::string paper;
  std::string note;
};

struct TableReport {
  int table = 1;
  std::optional<Interpretation> interpretation;
  bool checksum_ok = false;
  std::vector<RowReport> rows;
  std::vector<Finding> findings;  // cross-cutting discrepancies

  std::size_t count(CellStatus s) const;
  std::size_t count(const std::string& column, CellStatus s) const;
};

TableReport reproduce_table2_alpha_beta();
TableReport reproduce_tables(int which, std::optional<Interpretation> interpretation);

// Discrepancies that do not belong to a table: 228 vs 296 for the
// conditioned star, the caterpillar formula vs the five-entry lemma, and the
// three pairwise forms on P4.
std::vector<Finding> standing_findings();

// Printed decimal comparison: our value rounded to the printed precision.
bool matches_printed(const Rational& ours, const std::string& printed);

}  // namespace irrforge
