#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace irrforge {

// Number of distinct permutations of a multiset (n! / Π mult!).
std::uint64_t multiset_permutation_count(std::span<const int> items);

// The rank-th distinct permutation in lexicographic order, 0-based.
// `items` may be in any order.
std::vector<int> unrank_multiset_permutation(std::span<const int> items, std::uint64_t rank);

// Splits [0, total) into at most `pieces` contiguous ranges of near-equal
// size. Used to hand lexicographic permutation ranges to workers.
std::vector<std::uint64_t> chunk_bounds(std::uint64_t total, std::uint64_t pieces);

}  // namespace irrforge
