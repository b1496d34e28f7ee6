#include "irrforge/multiset_perm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace irrforge {

namespace {

std::uint64_t count_from_multiplicities(const std::map<int, int>& mult) {
  // Product of binomials C(placed + c, c); each partial product is an
  // integer, so the running value never exceeds the final count.
  unsigned __int128 total = 1;
  int placed = 0;
  for (const auto& [value, c] : mult) {
    for (int j = 1; j <= c; ++j) {
      total = total * static_cast<unsigned>(placed + j) / static_cast<unsigned>(j);
      if (total > UINT64_MAX) throw std::overflow_error("multiset permutation count overflows 64 bits");
    }
    placed += c;
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace

std::uint64_t multiset_permutation_count(std::span<const int> items) {
  std::map<int, int> mult;
  for (int x : items) ++mult[x];
  return count_from_multiplicities(mult);
}

std::vector<int> unrank_multiset_permutation(std::span<const int> items, std::uint64_t rank) {
  std::map<int, int> mult;
  for (int x : items) ++mult[x];
  if (rank >= count_from_multiplicities(mult)) throw std::out_of_range("permutation rank out of range");
  std::vector<int> out;
  out.reserve(items.size());
  for (std::size_t pos = 0; pos < items.size(); ++pos) {
    for (auto& [value, c] : mult) {
      if (c == 0) continue;
      --c;
      std::uint64_t below = count_from_multiplicities(mult);
      if (rank < below) {
        out.push_back(value);
        break;
      }
      rank -= below;
      ++c;
    }
  }
  return out;
}

std::vector<std::uint64_t> chunk_bounds(std::uint64_t total, std::uint64_t pieces) {
  pieces = std::max<std::uint64_t>(1, std::min(pieces, total));
  std::vector<std::uint64_t> bounds(pieces + 1);
  for (std::uint64_t i = 0; i <= pieces; ++i)
    bounds[i] = static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * i / pieces);
  return bounds;
}

}  // namespace irrforge
