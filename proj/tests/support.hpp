#pragma once

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sharkovsky/permutation.hpp"

namespace testing_support {

inline const std::string kFixtures = FIXTURE_DIR;
inline const std::string kGolden = GOLDEN_DIR;

// Sattolo's shuffle yields a uniformly random single n-cycle.
inline sharkovsky::CyclicPermutation random_cycle(int n, std::mt19937& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(pick(rng))]);
  }
  return sharkovsky::validate(images);
}

// A_pi straight from its definition, with no shared code.
inline std::pair<int, int> naive_A(const std::vector<int>& images, int lo, int hi) {
  int a = images[static_cast<std::size_t>(lo - 1)];
  int b = a;
  for (int i = lo; i <= hi; ++i) {
    a = std::min(a, images[static_cast<std::size_t>(i - 1)]);
    b = std::max(b, images[static_cast<std::size_t>(i - 1)]);
  }
  return {a, b};
}

}  // namespace testing_support
