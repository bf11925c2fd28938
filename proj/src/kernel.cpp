#include "sharkovsky/kernel.hpp"

#include <cmath>

namespace sharkovsky {

const char* to_string(Mode mode) { return mode == Mode::kExact ? "exact" : "float"; }

namespace {

void merge_component(std::vector<Interval<Rational>>& out, const Interval<Rational>& iv) {
  if (!out.empty() && !(out.back().hi < iv.lo)) {
    if (out.back().hi < iv.hi) out.back().hi = iv.hi;
    return;
  }
  out.push_back(iv);
}

// Zero set of g(x) - c, or of g(x) - x - c when minus_x is set.
std::vector<Interval<Rational>> level_set(const PiecewiseLinearMap<Rational>& g, const Rational& c, bool minus_x) {
  std::vector<Interval<Rational>> out;
  const auto& xs = g.xs();
  const auto& ys = g.ys();
  for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
    const Rational h0 = ys[j] - c - (minus_x ? xs[j] : Rational(0));
    const Rational h1 = ys[j + 1] - c - (minus_x ? xs[j + 1] : Rational(0));
    if (h0 == 0 && h1 == 0) {
      merge_component(out, {xs[j], xs[j + 1]});
    } else if ((h0 <= 0 && h1 >= 0) || (h0 >= 0 && h1 <= 0)) {
      const Rational x = xs[j] - h0 * (xs[j + 1] - xs[j]) / (h1 - h0);
      merge_component(out, {x, x});
    }
  }
  return out;
}

double golden_min(const std::function<double(double)>& fn, double a, double b, int iterations = 80) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(c);
  double fd = fn(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
    }
  }
  return fc < fd ? c : d;
}

}  // namespace

std::optional<Rational> ExactKernel::try_eval(const Rational& x) const {
  if (!f_.domain().contains(x)) return std::nullopt;
  return f_(x);
}

ExactKernel ExactKernel::power_on(const Interval<Rational>& I, int k) const {
  require(k >= 1, ErrorKind::kInvalidArgument, "power must be positive");
  auto h = f_.restricted(I);
  for (int i = 1; i < k; ++i) h = f_.after(h, cap_);
  return ExactKernel(std::move(h), cap_);
}

ExactKernel ExactKernel::along(const std::vector<Interval<Rational>>& ks) const {
  require(!ks.empty(), ErrorKind::kInvalidArgument, "empty interval chain");
  auto h = f_.restricted(ks.front());
  for (std::size_t j = 1; j < ks.size(); ++j) h = f_.restricted(ks[j]).after(h, cap_);
  return ExactKernel(std::move(h), cap_);
}

Interval<Rational> ExactKernel::image(const Interval<Rational>& I) const {
  if (I.degenerate()) {
    const Rational y = f_(I.lo);
    return {y, y};
  }
  const auto r = f_.restricted(I);
  const auto [lo, hi] = std::minmax_element(r.ys().begin(), r.ys().end());
  return {*lo, *hi};
}

std::pair<Rational, Rational> ExactKernel::extrema(const Interval<Rational>& I) const {
  if (I.degenerate()) return {I.lo, I.lo};
  const auto r = f_.restricted(I);
  const auto& ys = r.ys();
  const auto lo = std::min_element(ys.begin(), ys.end());
  const auto hi = std::max_element(ys.begin(), ys.end());
  return {r.xs()[static_cast<std::size_t>(lo - ys.begin())], r.xs()[static_cast<std::size_t>(hi - ys.begin())]};
}

PreimageSet<Rational> ExactKernel::preimages(const Interval<Rational>& I, const Rational& c) const {
  PreimageSet<Rational> out;
  if (I.degenerate()) {
    if (f_(I.lo) == c) out.components.push_back(I);
  } else {
    out.components = level_set(f_.restricted(I), c, false);
  }
  require(!out.components.empty(), ErrorKind::kEmptyPreimage,
          "c = " + to_string(c) + " is not attained on [" + to_string(I.lo) + ", " + to_string(I.hi) + "]");
  return out;
}

std::vector<Interval<Rational>> ExactKernel::fixed_points(const Interval<Rational>& I) const {
  if (I.degenerate()) {
    if (f_(I.lo) == I.lo) return {I};
    return {};
  }
  return level_set(f_.restricted(I), Rational(0), true);
}

std::optional<double> FloatKernel::try_eval(double x) const {
  for (int i = 0; i < power_; ++i) {
    auto y = f_.try_eval(x);
    if (!y) return std::nullopt;
    x = *y;
  }
  return x;
}

double FloatKernel::eval(double x) const {
  const double x0 = x;
  for (int i = 0; i < power_; ++i) {
    auto y = f_.try_eval(x);
    if (!y) {
      fail(ErrorKind::kDomainEscape, "orbit of " + to_string(x0) + " left the domain at step " + std::to_string(i));
    }
    x = *y;
  }
  return x;
}

int FloatKernel::scaled_samples(int base) const {
  return power_ > 12 ? base * power_ / 12 : base;
}

double FloatKernel::slack(const Interval<double>& I) const {
  return opt_.residual_tol * (1.0 + std::abs(I.lo) + std::abs(I.hi));
}

std::pair<double, double> FloatKernel::extrema(const Interval<double>& I) const {
  if (I.degenerate()) return {I.lo, I.lo};
  const int n = scaled_samples(opt_.preimage_samples);
  const double step = (I.hi - I.lo) / n;
  int imin = -1;
  int imax = -1;
  double vmin = INFINITY;
  double vmax = -INFINITY;
  for (int i = 0; i <= n; ++i) {
    const double x = i == n ? I.hi : I.lo + step * i;
    const double y = eval(x);
    if (y < vmin) {
      vmin = y;
      imin = i;
    }
    if (y > vmax) {
      vmax = y;
      imax = i;
    }
  }
  auto refine = [&](int i, double sign, double best) {
    double x_best = i == n ? I.hi : I.lo + step * i;
    const double a = std::max(I.lo, x_best - step);
    const double b = std::min(I.hi, x_best + step);
    const double x = golden_min([&](double t) { return sign * eval(t); }, a, b);
    return sign * eval(x) < sign * best ? x : x_best;
  };
  return {refine(imin, 1.0, vmin), refine(imax, -1.0, vmax)};
}

Interval<double> FloatKernel::image(const Interval<double>& I) const {
  const auto [amin, amax] = extrema(I);
  return {eval(amin), std::max(eval(amin), eval(amax))};
}

PreimageSet<double> FloatKernel::preimages(const Interval<double>& I, double c) const {
  PreimageSet<double> out;
  PartialFunction g = [&](double x) -> std::optional<double> {
    auto y = try_eval(x);
    if (!y) return std::nullopt;
    return *y - c;
  };
  out.components = scan_zeros(g, I.lo, I.hi, scaled_samples(opt_.preimage_samples), opt_);
  require(!out.components.empty(), ErrorKind::kEmptyPreimage,
          "c = " + to_string(c) + " is not attained on [" + to_string(I.lo) + ", " + to_string(I.hi) + "]");
  return out;
}

std::vector<Interval<double>> FloatKernel::fixed_points(const Interval<double>& I) const {
  PartialFunction g = [&](double x) -> std::optional<double> {
    auto y = try_eval(x);
    if (!y) return std::nullopt;
    return *y - x;
  };
  return scan_zeros(g, I.lo, I.hi, scaled_samples(opt_.cycle_samples), opt_);
}

bool FloatKernel::covers(const Interval<double>& I, const Interval<double>& J) const {
  const auto img = image(I);
  const double s = slack(J);
  return img.lo <= J.lo + s && img.hi >= J.hi - s;
}

bool FloatKernel::contains(const Interval<double>& I, double x) const {
  const double s = slack(I);
  return x >= I.lo - s && x <= I.hi + s;
}

}  // namespace sharkovsky
