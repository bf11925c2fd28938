#pragma once

#include <cstdint>
#include <vector>

namespace sharkovsky {

// n = 2^power * odd with odd odd.
struct PeriodDecomposition {
  std::uint64_t n;
  unsigned power;
  std::uint64_t odd;

  bool is_power_of_two() const { return odd == 1; }
};

PeriodDecomposition decompose(std::uint64_t n);

// True iff n strictly precedes m in the Sharkovsky ordering
//   3 > 5 > 7 > ... > 2*3 > 2*5 > ... > 4*3 > ... > 8 > 4 > 2 > 1,
// i.e. a cycle of period n forces one of period m.
bool precedes(std::uint64_t n, std::uint64_t m);

// Every m in [1, cap] with precedes(n, m), in Sharkovsky order.
std::vector<std::uint64_t> forced_periods(std::uint64_t n, std::uint64_t cap);

// First `count` entries of the full ordering. The first row (odd numbers >= 3)
// is infinite, so this is always 3, 5, 7, ...
std::vector<std::uint64_t> order_prefix(std::size_t count);

// All of {1..bound} in Sharkovsky order, built row by row without consulting
// `precedes`; serves as the independent oracle for the comparator.
std::vector<std::uint64_t> order_restricted(std::uint64_t bound);

}  // namespace sharkovsky
