#include "sharkovsky/loop_builder.hpp"

#include <algorithm>
#include <string>

#include "sharkovsky/error.hpp"
#include "sharkovsky/order.hpp"

namespace sharkovsky {

namespace {

bool covers(const CyclicPermutation& pi, const Segment& from, const Segment& to) {
  return apply_A(pi, from).contains(to);
}

bool has_below_case(const CyclicPermutation& pi, int i0) {
  for (int i = 1; i <= i0; ++i) {
    if (pi(i) <= i0) return true;
  }
  return false;
}

// Case-1 data; the caller guarantees some i <= i0 has pi(i) <= i0.
DoubleGraphData double_graph_below(const CyclicPermutation& pi) {
  const int i0 = pivot(pi);
  DoubleGraphData d{};
  d.i1 = select_closing_i1(pi, ClosingCase::kBelow).i1;
  d.i2 = d.i1;
  for (int i = d.i1; i <= i0; ++i) {
    if (pi(i) > pi(d.i2)) d.i2 = i;
  }
  d.i3 = i0 + 1;
  d.i4 = 0;
  for (int i = i0 + 1; i <= pi(d.i2); ++i) {
    if (pi(i) <= d.i1) {
      d.i4 = i;
      break;
    }
  }
  require(d.i4 != 0 && d.i1 < d.i2 && d.i2 < d.i3, ErrorKind::kPrecondition,
          "double-graph indices do not exist for this permutation");
  return d;
}

}  // namespace

SegmentChain chain_to(const CyclicPermutation& pi, int i1) {
  const int n = pi.size();
  require(n > 2, ErrorKind::kPrecondition, "chain_to requires n > 2");
  const int i0 = pivot(pi);
  require(i1 >= 1 && i1 <= n - 1 && i1 != i0, ErrorKind::kInvalidArgument,
          "target i1 = " + std::to_string(i1) + " must lie in |1," + std::to_string(n - 1) +
              "| and differ from i0 = " + std::to_string(i0));

  const auto iterates = iterate_A(pi, Segment::unit(i0), expansion_steps(pi));
  auto level = [&](int t) {
    const Segment target = Segment::unit(t);
    for (std::size_t j = 0; j < iterates.size(); ++j) {
      if (iterates[j].contains(target)) return j;
    }
    fail(ErrorKind::kPrecondition, "segment " + to_string(target) + " never covered");
  };

  std::vector<int> backwards{i1};
  int t = i1;
  while (t != i0) {
    const Segment source = iterates[level(t) - 1];
    int chosen = 0;
    for (int u = source.lo; u < source.hi; ++u) {
      if (covers(pi, Segment::unit(u), Segment::unit(t))) {
        chosen = u;
        break;
      }
    }
    require(chosen != 0, ErrorKind::kPrecondition, "no unit predecessor found");
    t = chosen;
    backwards.push_back(t);
  }

  SegmentChain chain;
  for (auto it = backwards.rbegin(); it != backwards.rend(); ++it) chain.steps.push_back(Segment::unit(*it));
  chain.head_self_loop = covers(pi, chain.steps.front(), chain.steps.front());
  chain.closed = covers(pi, chain.steps.back(), chain.steps.front());
  return chain;
}

ClosingChoice select_closing_i1(const CyclicPermutation& pi, ClosingCase which) {
  const auto membership = is_class_A(pi);
  require(membership.member, ErrorKind::kPrecondition, "permutation is not in class A");
  const int n = pi.size();
  const int i0 = pivot(pi);

  if (which != ClosingCase::kAbove) {
    for (int i = i0; i >= 1; --i) {
      if (pi(i) <= i0) return {i, ClosingCase::kBelow};
    }
    require(which == ClosingCase::kAuto, ErrorKind::kPrecondition,
            "no i <= i0 with pi(i) <= i0");
  }
  for (int i = i0 + 1; i <= n; ++i) {
    if (pi(i) > i0) return {i - 1, ClosingCase::kAbove};
  }
  fail(ErrorKind::kPrecondition, "no i > i0 with pi(i) > i0");
}

SegmentChain closed_unit_loop(const CyclicPermutation& pi, ClosingCase which) {
  const auto choice = select_closing_i1(pi, which);
  SegmentChain chain = chain_to(pi, choice.i1);
  require(chain.closed, ErrorKind::kPrecondition, "closing index does not cover the pivot segment");
  return chain;
}

DoubleGraphData double_graph_data(const CyclicPermutation& pi) {
  require(pi.size() > 2, ErrorKind::kPrecondition, "double_graph_data requires n > 2");
  require(is_class_A(pi).member, ErrorKind::kPrecondition, "permutation is not in class A");
  if (has_below_case(pi, pivot(pi))) return double_graph_below(pi);

  const int n = pi.size();
  const auto r = double_graph_below(pi.reflected());
  DoubleGraphData d{};
  d.i1 = n + 1 - r.i3;
  d.i2 = n + 1 - r.i2;
  d.i3 = n + 1 - r.i1;
  d.i4 = n + 1 - r.i4;
  d.reflected = true;
  return d;
}

CoveringLoopPlan loop_for_period(const CyclicPermutation& pi, int m) {
  const int n = pi.size();
  require(n > 1 && n % 2 == 1, ErrorKind::kPrecondition,
          "loop_for_period requires odd n > 1, got n = " + std::to_string(n));
  require(m >= 1, ErrorKind::kInvalidArgument, "period must be positive");
  require(m == n || precedes(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)),
          ErrorKind::kNotForced,
          "period " + std::to_string(m) + " is not forced by " + std::to_string(n));

  const auto chain = closed_unit_loop(pi);
  const int r = static_cast<int>(chain.steps.size()) - 1;
  const Segment& pivot_segment = chain.steps.front();
  const Segment& closing_segment = chain.steps.back();

  CoveringLoopPlan plan;
  plan.period = m;
  if (m == 1) {
    plan.kind = PlanKind::kFixedPoint;
    plan.segments = {pivot_segment};
    return plan;
  }
  if (m == 2) {
    plan.kind = PlanKind::kPeriodTwo;
    if (r == 1) {
      plan.segments = {closing_segment, pivot_segment};
    } else {
      plan.map = PlanMap::kMapSquared;
      plan.segments = {double_graph_data(pi).left()};
    }
    return plan;
  }
  if (m > r && (m >= n || m % 2 == 1)) {
    // Head |i1,*| appears once; the pivot segment repeats k = m - r times.
    plan.segments.push_back(closing_segment);
    plan.segments.insert(plan.segments.end(), static_cast<std::size_t>(m - r), pivot_segment);
    plan.segments.insert(plan.segments.end(), chain.steps.begin() + 1, chain.steps.end() - 1);
    return plan;
  }
  // Even m < n: I1 -> I2 -> ... -> I2 -> I1 under f^2 with m/2 - 1 copies of I2.
  const auto d = double_graph_data(pi);
  plan.map = PlanMap::kMapSquared;
  plan.segments.push_back(d.left());
  plan.segments.insert(plan.segments.end(), static_cast<std::size_t>(m / 2 - 1), d.right());
  return plan;
}

bool plan_is_consistent(const CyclicPermutation& pi, const CoveringLoopPlan& plan) {
  if (plan.segments.empty()) return false;
  const int factor = plan.map == PlanMap::kMapSquared ? 2 : 1;
  if (plan.length() * factor != plan.period) return false;
  for (std::size_t j = 0; j < plan.segments.size(); ++j) {
    const Segment& next = plan.segments[(j + 1) % plan.segments.size()];
    Segment image = plan.segments[j];
    for (int step = 0; step < factor; ++step) image = apply_A(pi, image);
    if (!image.contains(next)) return false;
  }
  return true;
}

const char* to_string(PlanMap map) { return map == PlanMap::kMap ? "f" : "f_squared"; }

const char* to_string(PlanKind kind) {
  switch (kind) {
    case PlanKind::kItinerary: return "itinerary";
    case PlanKind::kFixedPoint: return "fixed_point";
    case PlanKind::kPeriodTwo: return "period_two";
  }
  return "unknown";
}

}  // namespace sharkovsky
