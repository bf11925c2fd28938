#include "sharkovsky/kernel.hpp"
#include "sharkovsky/verifier.hpp"

namespace sharkovsky {

const char* to_string(Construction c) {
  switch (c) {
    case Construction::kNone: return "none";
    case Construction::kGiven: return "given";
    case Construction::kFixedPoint: return "fixed_point";
    case Construction::kLemma2Period2: return "lemma2_period2";
    case Construction::kPowerReduction: return "power_reduction";
    case Construction::kItineraryLoop: return "itinerary_loop";
  }
  return "unknown";
}

const char* to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::kOk: return "ok";
    case EntryStatus::kFailed: return "failed";
    case EntryStatus::kNotForced: return "not_forced";
    case EntryStatus::kGiven: return "given";
  }
  return "unknown";
}

int exact_least_period(const PiecewiseLinearMap<Rational>& f, const Rational& x, int bound) {
  Rational y = x;
  for (int d = 1; d <= bound; ++d) {
    y = f(y);
    if (y == x) return d;
  }
  return 0;
}

std::vector<PeriodicSet> brute_force_periodic_points(const PiecewiseLinearMap<Rational>& f, int m, std::size_t cap) {
  require(m >= 1 && m <= 12, ErrorKind::kInvalidArgument, "brute force supports 1 <= m <= 12");
  const ExactKernel fm(f.power(m, cap), cap);
  const ExactKernel base(f, cap);
  std::vector<PeriodicSet> out;
  for (const auto& comp : fm.fixed_points(f.domain())) out.push_back({comp, 0});
  for (auto& s : out) {
    if (!s.continuum()) {
      s.least_period = exact_least_period(f, s.points.lo, m);
      continue;
    }
    for (int d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      const auto g = base.power_on(s.points, d).map();
      if (g.xs() == g.ys()) {
        s.least_period = d;
        break;
      }
    }
  }
  return out;
}

}  // namespace sharkovsky
