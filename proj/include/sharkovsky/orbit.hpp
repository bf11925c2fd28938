#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sharkovsky/itinerary.hpp"
#include "sharkovsky/kernel.hpp"
#include "sharkovsky/permutation.hpp"

namespace sharkovsky {

/// Points b_1 < ... < b_n cyclically permuted by a map, with the induced permutation.
template <typename Scalar>
struct Orbit {
  std::vector<Scalar> points;
  CyclicPermutation permutation;

  int period() const { return permutation.size(); }
  Interval<Scalar> hull() const { return {points.front(), points.back()}; }
};

/// pi(i) = index of f(b_i) among the sorted points.
template <typename Kernel>
Orbit<typename Kernel::Scalar> orbit_to_permutation(const Kernel& f, std::vector<typename Kernel::Scalar> points) {
  require(!points.empty(), ErrorKind::kInvalidArgument, "empty orbit");
  std::sort(points.begin(), points.end());
  for (std::size_t i = 1; i < points.size(); ++i) {
    require(!f.same(points[i - 1], points[i]), ErrorKind::kNotACycle, "orbit points are not distinct");
  }
  std::vector<int> images;
  for (const auto& b : points) {
    const auto y = f.eval(b);
    int match = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (f.same(y, points[j])) {
        match = static_cast<int>(j) + 1;
        break;
      }
    }
    require(match != 0, ErrorKind::kNotACycle, "f(" + to_string(b) + ") = " + to_string(y) + " is not an orbit point");
    images.push_back(match);
  }
  return {std::move(points), validate(images)};
}

/// One orbit per distinct cycle of least period m whose points lie in `domain`.
template <typename Kernel>
std::vector<Orbit<typename Kernel::Scalar>> find_cycles(const Kernel& f,
                                                        const Interval<typename Kernel::Scalar>& domain, int m) {
  using Scalar = typename Kernel::Scalar;
  require(m >= 1, ErrorKind::kInvalidArgument, "period must be positive");
  std::vector<Orbit<Scalar>> found;
  for (const auto& root : f.power(m).fixed_points(domain)) {
    std::vector<Scalar> candidates{root.lo};
    if (!root.degenerate()) candidates.push_back((root.lo + root.hi) / 2);
    for (const auto& x : candidates) {
      try {
        if (least_period(f, x, m) != m) continue;
      } catch (const Error&) {
        continue;
      }
      const bool known = std::any_of(found.begin(), found.end(), [&](const auto& orbit) {
        return std::any_of(orbit.points.begin(), orbit.points.end(), [&](const auto& b) { return f.same(b, x); });
      });
      if (known) continue;
      std::vector<Scalar> points{x};
      for (int i = 1; i < m; ++i) points.push_back(f.eval(points.back()));
      try {
        found.push_back(orbit_to_permutation(f, std::move(points)));
      } catch (const Error&) {
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.points.front() < b.points.front(); });
  return found;
}

}  // namespace sharkovsky
