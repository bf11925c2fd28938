#include "sharkovsky/order.hpp"

#include <algorithm>
#include <string>

#include "sharkovsky/error.hpp"

namespace sharkovsky {

PeriodDecomposition decompose(std::uint64_t n) {
  require(n >= 1, ErrorKind::kInvalidArgument, "period must be positive");
  PeriodDecomposition d{n, 0, n};
  while (d.odd % 2 == 0) {
    d.odd /= 2;
    ++d.power;
  }
  return d;
}

bool precedes(std::uint64_t n, std::uint64_t m) {
  require(n >= 1 && m >= 1, ErrorKind::kInvalidArgument, "periods must be positive");
  const auto a = decompose(n);
  const auto b = decompose(m);
  const bool n_pow = a.is_power_of_two();
  const bool m_pow = b.is_power_of_two();
  if (!n_pow && !m_pow) return a.power < b.power || (a.power == b.power && a.odd < b.odd);
  if (!n_pow && m_pow) return true;
  if (n_pow && !m_pow) return false;
  return a.power > b.power;
}

std::vector<std::uint64_t> forced_periods(std::uint64_t n, std::uint64_t cap) {
  require(n >= 1, ErrorKind::kInvalidArgument, "period must be positive");
  require(cap >= 1, ErrorKind::kInvalidArgument, "cap must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m <= cap; ++m) {
    if (precedes(n, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](auto x, auto y) { return precedes(x, y); });
  return out;
}

std::vector<std::uint64_t> order_prefix(std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(2 * i + 3);
  return out;
}

std::vector<std::uint64_t> order_restricted(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound == 0) return out;
  // Rows 2^l * {3, 5, 7, ...}.
  for (std::uint64_t scale = 1; 3 * scale <= bound; scale *= 2) {
    for (std::uint64_t odd = 3; odd * scale <= bound; odd += 2) out.push_back(odd * scale);
  }
  // Tail: descending powers of two.
  std::uint64_t top = 1;
  while (top * 2 <= bound) top *= 2;
  for (std::uint64_t p = top; p >= 1; p /= 2) out.push_back(p);
  return out;
}

}  // namespace sharkovsky
