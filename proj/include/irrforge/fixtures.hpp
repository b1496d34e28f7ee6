#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace irrforge {

// Printed values are kept as the exact strings that appear in the tables.
struct Table1Row {
  std::array<int, 5> degrees;
  std::string l1, l2, l3;
};

struct Table2Row {
  std::array<int, 5> degrees;
  std::string irr_max, irr_min, alpha, beta;
};

const std::vector<Table1Row>& table1_fixture();
const std::vector<Table2Row>& table2_fixture();

// Printed estimate for the conditioned star of order t = 7.
inline constexpr std::int64_t kStarEstimateFixture = 228;
inline constexpr int kStarFixtureParameter = 7;

std::uint64_t fixture_checksum();
bool fixture_checksum_ok();

}  // namespace irrforge
