#pragma once

#include <vector>

#include "sharkovsky/permutation.hpp"

namespace sharkovsky {

// Unit segments |i_j,*| where each step's A-image contains the next step.
struct SegmentChain {
  std::vector<Segment> steps;
  bool closed = false;          // last step covers the first
  bool head_self_loop = false;  // first step covers itself
};

// Which side of the pivot supplies the closing index i1.
enum class ClosingCase {
  kAuto,   // below if possible, otherwise above
  kBelow,  // some i <= i0 with pi(i) <= i0: i1 = max such i
  kAbove,  // some i > i0 with pi(i) > i0: i1 = min such i, minus one
};

struct ClosingChoice {
  int i1;
  ClosingCase used;
};

/// Chain |i0,*| -> ... -> |i1,*| built backwards through the A-iterates of the
/// pivot segment. Each predecessor is the unit sub-segment of the previous
/// iterate with the smallest left index whose image covers the current target.
SegmentChain chain_to(const CyclicPermutation& pi, int i1);

/// Index i1 with A|i1,*| covering |i0,*|. Requires class-A membership.
ClosingChoice select_closing_i1(const CyclicPermutation& pi, ClosingCase which = ClosingCase::kAuto);

/// chain_to(select_closing_i1) closed back to the pivot segment.
SegmentChain closed_unit_loop(const CyclicPermutation& pi, ClosingCase which = ClosingCase::kAuto);

// Indices certifying that A^2 sends each of |i1,i2| and |i2,i3| over both.
struct DoubleGraphData {
  int i1;
  int i2;
  int i3;
  int i4;
  // Computed on the reflected permutation (only the above-pivot case applies)
  // and mapped back through i -> n+1-i.
  bool reflected = false;

  Segment left() const { return Segment(i1, i2); }
  Segment right() const { return Segment(i2, i3); }
};

DoubleGraphData double_graph_data(const CyclicPermutation& pi);

enum class PlanMap { kMap, kMapSquared };

enum class PlanKind {
  kItinerary,   // follow the loop with the itinerary engine
  kFixedPoint,  // degenerate self-loop: locate a fixed point directly
  kPeriodTwo,   // degenerate two-loop: use the period-2 construction
};

// A loop of segments (head first) whose itinerary realizes `period` for f.
struct CoveringLoopPlan {
  int period = 0;
  std::vector<Segment> segments;
  PlanMap map = PlanMap::kMap;
  PlanKind kind = PlanKind::kItinerary;

  int length() const { return static_cast<int>(segments.size()); }
  const Segment& head() const { return segments.front(); }
};

/// Covering loop realizing period m for a permutation of odd length n > 1.
/// Throws NotForced unless m == n or n forces m.
CoveringLoopPlan loop_for_period(const CyclicPermutation& pi, int m);

/// Re-checks every covering step of a plan with apply_A (twice under kMapSquared).
bool plan_is_consistent(const CyclicPermutation& pi, const CoveringLoopPlan& plan);

const char* to_string(PlanMap map);
const char* to_string(PlanKind kind);

}  // namespace sharkovsky
