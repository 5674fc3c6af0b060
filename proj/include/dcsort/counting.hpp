// Comparison-counting element for the benchmark harness and the
// complexity tests.
#pragma once

#include <compare>
#include <cstdint>

namespace dcsort {

/// Thread-local tally of comparisons made through CountedInt.
inline std::uint64_t& comparison_count() {
  thread_local std::uint64_t count = 0;
  return count;
}

inline void reset_comparison_count() { comparison_count() = 0; }

/// int64 wrapper whose comparisons bump the thread-local counter.
struct CountedInt {
  std::int64_t value = 0;

  friend bool operator==(const CountedInt& a, const CountedInt& b) {
    ++comparison_count();
    return a.value == b.value;
  }
  friend std::strong_ordering operator<=>(const CountedInt& a, const CountedInt& b) {
    ++comparison_count();
    return a.value <=> b.value;
  }
};

}  // namespace dcsort
