#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sharkovsky/interval.hpp"

namespace sharkovsky {

struct ScanOptions {
  double root_tol = 1e-12;      // bracket width at which bisection may stop
  double residual_tol = 1e-9;   // |g| a certified root must reach
  double period_tol = 1e-6;     // separation below which two points are the same
  double value_rel_tol = 1e-10; // |g| <= this * (1 + |x|) counts as a zero sample
  int preimage_samples = 4096;
  int cycle_samples = 8192;
  int max_bisections = 200;
};

// Partial function sampled by the scanners; nullopt marks points where it is undefined.
using PartialFunction = std::function<std::optional<double>(double)>;

/// Bisection on a bracket with g(a), g(b) of opposite sign (or one of them zero).
/// Stops once the bracket is narrower than root_tol and |g| <= residual_tol,
/// or after max_bisections halvings, and returns the best point seen.
double bisect(const PartialFunction& g, double a, double b, const ScanOptions& opt);

/// Golden-section minimisation of |g| on [a, b].
double golden_min_abs(const PartialFunction& g, double a, double b, int iterations = 100);

/// Zero set of g on [a, b] as sorted closed intervals (isolated zeros are
/// degenerate). Uses `samples` equal cells: sign changes are bisected, runs of
/// zero samples become intervals, and local minima of |g| without a sign change
/// are refined by golden section and kept when they reach the zero tolerance.
std::vector<Interval<double>> scan_zeros(const PartialFunction& g, double a, double b, int samples,
                                         const ScanOptions& opt);

}  // namespace sharkovsky
