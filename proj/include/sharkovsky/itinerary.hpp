#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sharkovsky/error.hpp"
#include "sharkovsky/interval.hpp"
#include "sharkovsky/kernel.hpp"

namespace sharkovsky {

/// Intervals I_0 -> I_1 -> ... -> I_{n-1} -> I_0, each covering the next.
template <typename Scalar>
using CoveringLoop = std::vector<Interval<Scalar>>;

template <typename Scalar>
struct PeriodicPointCertificate {
  Scalar gamma{};
  int loop_length = 0;
  Scalar residual{};  // |g^n(gamma) - gamma| for the map g the loop was followed with
  int least_period = 0;  // under that same map g
  CoveringLoop<Scalar> itinerary;
};

/// Least d in [1, n] with g^d(x) = x (within the kernel's period threshold).
/// Throws NotPeriodic if g^n(x) misses x by more than the residual tolerance.
template <typename Kernel>
int least_period(const Kernel& g, const typename Kernel::Scalar& x, int n) {
  require(n >= 1, ErrorKind::kInvalidArgument, "period must be positive");
  auto y = x;
  int first = 0;
  for (int d = 1; d <= n; ++d) {
    y = g.eval(y);
    if (first == 0 && g.same(y, x)) first = d;
  }
  require(g.residual_ok(g.distance(y, x)), ErrorKind::kNotPeriodic,
          "|f^" + std::to_string(n) + "(x) - x| = " + to_string(g.distance(y, x)) + " at x = " + to_string(x));
  return first == 0 ? n : first;
}

/// K inside I with f(K) = J, from the two-case construction over
/// A = f^-1(c) and B = f^-1(d) in I, where J = [c, d].
template <typename Kernel>
auto shrink_to_exact_cover(const Kernel& f, const Interval<typename Kernel::Scalar>& I,
                           const Interval<typename Kernel::Scalar>& J) {
  using Scalar = typename Kernel::Scalar;
  require(f.covers(I, J), ErrorKind::kCoverageViolation, "f(I) does not contain J");
  require(!J.degenerate(), ErrorKind::kDegenerate, "target interval is a single point");
  const auto A = f.preimages(I, J.lo);
  const auto B = f.preimages(I, J.hi);
  if (B.max() < A.min()) return Interval<Scalar>(B.max(), A.min());

  const Scalar& max_b = B.max();
  Scalar gamma = A.min();
  for (const auto& comp : A.components) {
    if (!(max_b < comp.hi)) gamma = comp.hi;
  }
  Scalar delta = max_b;
  for (const auto& comp : B.components) {
    if (!(comp.hi < gamma)) {
      delta = gamma < comp.lo ? comp.lo : gamma;
      break;
    }
  }
  return Interval<Scalar>(gamma, delta);
}

/// Follows the loop backwards with shrink_to_exact_cover, then takes a root of
/// f^n(x) - x in K_0. Roots are tried left to right; `accept` may veto a
/// candidate (the first acceptable one wins).
template <typename Kernel>
PeriodicPointCertificate<typename Kernel::Scalar> follow_loop(
    const Kernel& f, const CoveringLoop<typename Kernel::Scalar>& loop,
    const std::function<bool(const PeriodicPointCertificate<typename Kernel::Scalar>&)>& accept = {}) {
  using Scalar = typename Kernel::Scalar;
  const std::size_t n = loop.size();
  require(n >= 1, ErrorKind::kInvalidArgument, "empty covering loop");
  for (std::size_t j = 0; j < n; ++j) {
    require(f.covers(loop[j], loop[(j + 1) % n]), ErrorKind::kCoverageViolation,
            "I_" + std::to_string(j) + " does not cover I_" + std::to_string((j + 1) % n));
  }

  std::vector<Interval<Scalar>> ks(n);
  ks[n - 1] = shrink_to_exact_cover(f, loop[n - 1], loop[0]);
  for (std::size_t j = n - 1; j-- > 0;) ks[j] = shrink_to_exact_cover(f, loop[j], ks[j + 1]);

  const auto roots = f.along(ks).fixed_points(ks[0]);
  require(!roots.empty(), ErrorKind::kBisectionFailure, "no sign change of f^n(x) - x on K_0");

  std::vector<Scalar> candidates;
  for (const auto& r : roots) {
    candidates.push_back(r.lo);
    if (!r.degenerate()) {
      candidates.push_back((r.lo + r.hi) / 2);
      candidates.push_back(r.hi);
    }
  }
  const int length = static_cast<int>(n);
  for (const auto& x : candidates) {
    PeriodicPointCertificate<Scalar> cert;
    cert.gamma = x;
    cert.loop_length = length;
    Scalar y = x;
    for (int i = 0; i < length; ++i) y = f.eval(y);
    cert.residual = f.distance(y, x);
    cert.itinerary = loop;
    try {
      cert.least_period = least_period(f, x, length);
    } catch (const Error&) {
      continue;
    }
    if (!accept || accept(cert)) return cert;
  }
  fail(ErrorKind::kNotPeriodic, "no root of f^" + std::to_string(n) + "(x) - x on K_0 passed the period check");
}

/// Independent re-verification by direct iteration.
template <typename Kernel>
bool recheck(const Kernel& f, const PeriodicPointCertificate<typename Kernel::Scalar>& cert) {
  if (cert.loop_length < 1 || static_cast<int>(cert.itinerary.size()) != cert.loop_length) return false;
  auto y = cert.gamma;
  for (int i = 0; i < cert.loop_length; ++i) {
    if (!f.contains(cert.itinerary[static_cast<std::size_t>(i)], y)) return false;
    y = f.eval(y);
  }
  if (!f.residual_ok(f.distance(y, cert.gamma))) return false;
  try {
    const int p = least_period(f, cert.gamma, cert.loop_length);
    return p == cert.least_period && cert.loop_length % p == 0;
  } catch (const Error&) {
    return false;
  }
}

enum class FixedPointMode { kSelfMap, kCoversItself };

/// A fixed point in I, bracketed by I itself (f(I) inside I) or by the points
/// where f attains its min and max on I (f(I) containing I).
template <typename Kernel>
typename Kernel::Scalar find_fixed_point(const Kernel& f, const Interval<typename Kernel::Scalar>& I,
                                         FixedPointMode mode) {
  using Scalar = typename Kernel::Scalar;
  Interval<Scalar> bracket = I;
  if (mode == FixedPointMode::kSelfMap) {
    const auto img = f.image(I);
    require(f.contains(I, img.lo) && f.contains(I, img.hi), ErrorKind::kPrecondition, "f(I) is not inside I");
  } else {
    require(f.covers(I, I), ErrorKind::kPrecondition, "f(I) does not contain I");
    const auto [a, b] = f.extrema(I);
    bracket = Interval<Scalar>::hull(a, b);
  }
  const auto roots = f.fixed_points(bracket);
  require(!roots.empty(), ErrorKind::kBisectionFailure, "no fixed point located in the bracket");
  return roots.front().lo;
}

}  // namespace sharkovsky
