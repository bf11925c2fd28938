#pragma once

#include <algorithm>
#include <ostream>

#include "sharkovsky/error.hpp"
#include "sharkovsky/scalar.hpp"

namespace sharkovsky {

// Closed bounded interval [lo, hi]; lo == hi is a degenerate (point) interval.
template <typename Scalar>
struct Interval {
  Scalar lo;
  Scalar hi;

  Interval() = default;
  Interval(Scalar lo_, Scalar hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    require(!(hi < lo), ErrorKind::kInvalidArgument, "interval with hi < lo");
  }

  static Interval hull(const Scalar& a, const Scalar& b) {
    return a < b ? Interval(a, b) : Interval(b, a);
  }

  Scalar width() const { return hi - lo; }
  bool degenerate() const { return lo == hi; }
  bool contains(const Scalar& x) const { return !(x < lo) && !(hi < x); }
  bool contains(const Interval& other) const { return !(other.lo < lo) && !(hi < other.hi); }
  bool contains_interior(const Scalar& x) const { return lo < x && x < hi; }

  // Interior of *this meets `other` in more than an endpoint.
  bool interior_meets(const Interval& other) const { return lo < other.hi && other.lo < hi; }

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Interval<Scalar>& iv) {
  return os << '[' << to_string(iv.lo) << ", " << to_string(iv.hi) << ']';
}

template <typename To, typename From>
Interval<To> interval_cast(const Interval<From>& iv) {
  if constexpr (std::is_same_v<To, double>) {
    return {to_double(iv.lo), to_double(iv.hi)};
  } else {
    return {To(iv.lo), To(iv.hi)};
  }
}

}  // namespace sharkovsky
