#pragma once

#include <bit>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sharkovsky/itinerary.hpp"
#include "sharkovsky/kernel.hpp"
#include "sharkovsky/loop_builder.hpp"
#include "sharkovsky/orbit.hpp"
#include "sharkovsky/order.hpp"

namespace sharkovsky {

enum class Construction { kNone, kGiven, kFixedPoint, kLemma2Period2, kPowerReduction, kItineraryLoop };
enum class EntryStatus { kOk, kFailed, kNotForced, kGiven };

const char* to_string(Construction c);
const char* to_string(EntryStatus s);

template <typename Scalar>
struct ForcingEntry {
  int period = 0;
  EntryStatus status = EntryStatus::kNotForced;
  Construction construction = Construction::kNone;
  std::optional<Scalar> point;
  Scalar residual{};      // |f^period(point) - point|
  int least_period = 0;   // under f
  int map_power = 1;      // the loop was followed under f^map_power
  int loop_length = 0;
  std::vector<Interval<Scalar>> itinerary;
  std::string reason;     // failure stage and message
};

template <typename Scalar>
struct ForcingReport {
  int source_period = 0;
  int cap = 0;
  Mode mode = Mode::kExact;
  std::vector<ForcingEntry<Scalar>> entries;

  bool all_forced_ok() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const auto& e) { return e.status != EntryStatus::kFailed; });
  }
};

namespace detail {

template <typename Fn>
auto staged(const std::string& stage, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.kind(), stage + ": " + e.what());
  }
}

// The g-orbit through the smallest point of `orbit`, where g = f^h.
template <typename Kernel>
Orbit<typename Kernel::Scalar> sub_orbit(const Kernel& g, const Orbit<typename Kernel::Scalar>& orbit, int h) {
  const int n = orbit.period();
  const int p = n / std::gcd(n, h);
  std::vector<typename Kernel::Scalar> points{orbit.points.front()};
  for (int i = 1; i < p; ++i) points.push_back(g.eval(points.back()));
  return orbit_to_permutation(g, std::move(points));
}

inline bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

}  // namespace detail

/// Period-2 point from a cycle of period > 2: beta_0 is the largest orbit point
/// moved to the right, c the smallest preimage of beta_0 in [beta_0, f(beta_0)],
/// then a root of f^2(x) - x to the right of c that is not a fixed point.
template <typename Kernel>
PeriodicPointCertificate<typename Kernel::Scalar> find_two_cycle(const Kernel& f,
                                                                 const Orbit<typename Kernel::Scalar>& orbit) {
  using Scalar = typename Kernel::Scalar;
  require(orbit.period() > 2, ErrorKind::kPrecondition,
          "the period-2 construction needs a cycle of period > 2, got " + std::to_string(orbit.period()));
  const auto& B = orbit.points;
  const Scalar beta0 = B[static_cast<std::size_t>(pivot(orbit.permutation) - 1)];
  const Scalar image0 = B[static_cast<std::size_t>(orbit.permutation(pivot(orbit.permutation)) - 1)];
  const Scalar top = B.back();

  const Scalar c = detail::staged("two-cycle locate c", [&] { return f.preimages({beta0, image0}, beta0).min(); });
  const auto right_fixed = f.fixed_points({c, top});

  Interval<Scalar> bracket(c, top);
  if (!right_fixed.empty()) {
    const Scalar gamma = right_fixed.front().lo;
    const Scalar delta = detail::staged("two-cycle fixed point in [a, c]", [&] {
      const auto fps = f.fixed_points({beta0, c});
      require(!fps.empty(), ErrorKind::kBisectionFailure, "no fixed point found");
      return fps.front().lo;
    });
    const Scalar eps = detail::staged("two-cycle locate epsilon", [&] { return f.preimages({c, gamma}, delta).min(); });
    bracket = Interval<Scalar>(c, eps);
  }

  const auto roots = detail::staged("two-cycle root of f^2", [&] { return f.power_on(bracket, 2).fixed_points(bracket); });
  for (const auto& r : roots) {
    const Scalar x = r.lo;
    int p = 0;
    try {
      p = least_period(f, x, 2);
    } catch (const Error&) {
      continue;
    }
    if (p != 2) continue;
    PeriodicPointCertificate<Scalar> cert;
    cert.gamma = x;
    cert.loop_length = 2;
    cert.residual = f.distance(f.eval(f.eval(x)), x);
    cert.least_period = 2;
    cert.itinerary = {bracket, f.image(bracket)};
    return cert;
  }
  fail(ErrorKind::kBisectionFailure, "two-cycle root of f^2: no point of least period 2 in [" + to_string(bracket.lo) +
                                         ", " + to_string(bracket.hi) + "]");
}

/// Cycle of period 2^i: a 2-cycle of g = f^(2^(i-1)) found from the g-orbit of the given cycle.
template <typename Kernel>
PeriodicPointCertificate<typename Kernel::Scalar> find_power_of_two_cycle(
    const Kernel& f, const Orbit<typename Kernel::Scalar>& orbit, int i) {
  using Scalar = typename Kernel::Scalar;
  require(i >= 1 && i < 31, ErrorKind::kInvalidArgument, "exponent out of range");
  const int target = 1 << i;
  require(precedes(static_cast<std::uint64_t>(orbit.period()), static_cast<std::uint64_t>(target)),
          ErrorKind::kNotForced,
          "period " + std::to_string(target) + " is not forced by " + std::to_string(orbit.period()));
  if (i == 1) return find_two_cycle(f, orbit);

  const int h = target / 2;
  const Kernel g = detail::staged("power reduction compose", [&] { return f.power(h); });
  const auto g_orbit = detail::staged("power reduction orbit", [&] { return detail::sub_orbit(g, orbit, h); });
  const auto g_cert = find_two_cycle(g, g_orbit);

  PeriodicPointCertificate<Scalar> cert;
  cert.gamma = g_cert.gamma;
  cert.loop_length = target;
  Scalar y = cert.gamma;
  for (int k = 0; k < target; ++k) {
    cert.itinerary.push_back(k % h == 0 ? g_cert.itinerary[static_cast<std::size_t>(k / h)] : f.domain());
    y = f.eval(y);
  }
  cert.residual = f.distance(y, cert.gamma);
  cert.least_period = least_period(f, cert.gamma, target);
  return cert;
}

/// Every period m <= cap forced by the orbit's period, each with a certificate.
template <typename Kernel>
ForcingReport<typename Kernel::Scalar> verify_forcing(const Kernel& f, const Orbit<typename Kernel::Scalar>& orbit,
                                                      int cap) {
  using Scalar = typename Kernel::Scalar;
  require(cap >= 1, ErrorKind::kInvalidArgument, "cap must be positive");
  const int n = orbit.period();
  ForcingReport<Scalar> report;
  report.source_period = n;
  report.cap = cap;
  report.mode = Kernel::mode;

  // Sub-orbit data for the odd-part reduction, built once on demand.
  const auto split = decompose(static_cast<std::uint64_t>(n));
  const int h = 1 << split.power;
  std::optional<Kernel> g;
  std::optional<Orbit<Scalar>> g_orbit;

  for (int m = 1; m <= cap; ++m) {
    ForcingEntry<Scalar> e;
    e.period = m;
    if (m == n) {
      e.status = EntryStatus::kGiven;
      e.construction = Construction::kGiven;
      e.point = orbit.points.front();
      Scalar y = orbit.points.front();
      for (int k = 0; k < n; ++k) y = f.eval(y);
      e.residual = f.distance(y, orbit.points.front());
      e.least_period = n;
      e.loop_length = n;
      report.entries.push_back(std::move(e));
      continue;
    }
    if (!precedes(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m))) {
      report.entries.push_back(std::move(e));
      continue;
    }
    try {
      PeriodicPointCertificate<Scalar> cert;
      if (m == 1) {
        e.construction = Construction::kFixedPoint;
        cert.gamma = find_fixed_point(f, orbit.hull(), FixedPointMode::kCoversItself);
        cert.loop_length = 1;
        cert.least_period = 1;
        cert.itinerary = {orbit.hull()};
        cert.residual = f.distance(f.eval(cert.gamma), cert.gamma);
      } else if (m == 2) {
        e.construction = Construction::kLemma2Period2;
        cert = find_two_cycle(f, orbit);
      } else if (detail::is_power_of_two(m)) {
        e.construction = Construction::kPowerReduction;
        cert = find_power_of_two_cycle(f, orbit, std::countr_zero(static_cast<unsigned>(m)));
      } else {
        e.construction = Construction::kItineraryLoop;
        if (!g) {
          g = detail::staged("odd-part compose", [&] { return h == 1 ? f : f.power(h); });
          g_orbit = detail::staged("odd-part orbit", [&] { return detail::sub_orbit(*g, orbit, h); });
        }
        const int q = m / h;
        const auto plan = loop_for_period(g_orbit->permutation, q);
        const int factor = plan.map == PlanMap::kMapSquared ? 2 : 1;
        const Kernel G = factor == 2 ? g->power(2) : *g;
        CoveringLoop<Scalar> loop;
        for (const auto& s : plan.segments) {
          loop.emplace_back(g_orbit->points[static_cast<std::size_t>(s.lo - 1)],
                            g_orbit->points[static_cast<std::size_t>(s.hi - 1)]);
        }
        cert = follow_loop(G, loop, [&](const auto& c) {
          try {
            return least_period(f, c.gamma, m) == m;
          } catch (const Error&) {
            return false;
          }
        });
        require(recheck(G, cert), ErrorKind::kNotPeriodic, "certificate failed re-verification");
        e.map_power = h * factor;
      }
      e.point = cert.gamma;
      e.loop_length = cert.loop_length;
      e.itinerary = cert.itinerary;
      Scalar y = cert.gamma;
      for (int k = 0; k < m; ++k) y = f.eval(y);
      e.residual = f.distance(y, cert.gamma);
      e.least_period = least_period(f, cert.gamma, m);
      require(e.least_period == m, ErrorKind::kNotPeriodic,
              "constructed point has least period " + std::to_string(e.least_period));
      e.status = EntryStatus::kOk;
    } catch (const Error& err) {
      e.status = EntryStatus::kFailed;
      e.reason = err.what();
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

// A set of exact periodic points of f: an isolated point or a whole interval
// on which f^m is the identity. For an interval, least_period is the least d
// with f^d the identity on all of it.
struct PeriodicSet {
  Interval<Rational> points;
  int least_period = 0;

  bool continuum() const { return !points.degenerate(); }
};

/// All solutions of f^m(x) = x by exact piecewise composition.
/// Requires 1 <= m <= 12; throws BlowupCap past `cap` pieces.
std::vector<PeriodicSet> brute_force_periodic_points(const PiecewiseLinearMap<Rational>& f, int m,
                                                     std::size_t cap = kDefaultBlowupCap);

/// Exact least period of x under f, searched up to `bound`; 0 if not periodic by then.
int exact_least_period(const PiecewiseLinearMap<Rational>& f, const Rational& x, int bound);

}  // namespace sharkovsky
