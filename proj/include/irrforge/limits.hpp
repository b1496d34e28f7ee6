#pragma once

namespace irrforge {

inline constexpr int kDefaultMaxOrder = 10;
inline constexpr int kHardMaxOrder = 12;
inline constexpr int kMaxArrangementLength = 9;

// Default cap, optionally raised or lowered through IRRFORGE_MAX_N; never
// exceeds kHardMaxOrder.
int enumeration_cap();

}  // namespace irrforge
