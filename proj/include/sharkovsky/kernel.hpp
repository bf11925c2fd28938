#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sharkovsky/interval.hpp"
#include "sharkovsky/interval_maps.hpp"
#include "sharkovsky/scan.hpp"

namespace sharkovsky {

// Solutions of f(x) = c in some interval, as sorted disjoint closed intervals.
// A non-degenerate component is a plateau where f is constant.
template <typename Scalar>
struct PreimageSet {
  std::vector<Interval<Scalar>> components;

  bool plateau() const {
    return std::any_of(components.begin(), components.end(), [](const auto& c) { return !c.degenerate(); });
  }
  const Scalar& min() const { return components.front().lo; }
  const Scalar& max() const { return components.back().hi; }

  std::vector<Scalar> points() const {
    std::vector<Scalar> out;
    for (const auto& c : components) {
      out.push_back(c.lo);
      if (!c.degenerate()) out.push_back(c.hi);
    }
    return out;
  }
};

enum class Mode { kExact, kFloat };

const char* to_string(Mode mode);

/// Exact arithmetic on a rational piecewise-linear map. Powers are composed eagerly.
class ExactKernel {
 public:
  using Scalar = Rational;
  static constexpr Mode mode = Mode::kExact;

  explicit ExactKernel(PiecewiseLinearMap<Rational> f, std::size_t cap = kDefaultBlowupCap)
      : f_(std::move(f)), cap_(cap) {}

  const PiecewiseLinearMap<Rational>& map() const { return f_; }
  Interval<Rational> domain() const { return f_.domain(); }

  std::optional<Rational> try_eval(const Rational& x) const;
  Rational eval(const Rational& x) const { return f_(x); }

  ExactKernel power(int k) const { return ExactKernel(f_.power(k, cap_), cap_); }
  // f^k restricted to I.
  ExactKernel power_on(const Interval<Rational>& I, int k) const;
  // f|K_{n-1} o ... o f|K_0 for a chain with f(K_j) inside K_{j+1}.
  ExactKernel along(const std::vector<Interval<Rational>>& ks) const;

  Interval<Rational> image(const Interval<Rational>& I) const;
  // Leftmost points where min and max of f over I are attained.
  std::pair<Rational, Rational> extrema(const Interval<Rational>& I) const;
  PreimageSet<Rational> preimages(const Interval<Rational>& I, const Rational& c) const;
  std::vector<Interval<Rational>> fixed_points(const Interval<Rational>& I) const;

  bool covers(const Interval<Rational>& I, const Interval<Rational>& J) const { return image(I).contains(J); }
  bool contains(const Interval<Rational>& I, const Rational& x) const { return I.contains(x); }
  bool same(const Rational& a, const Rational& b) const { return a == b; }
  bool residual_ok(const Rational& r) const { return r == 0; }
  Rational distance(const Rational& a, const Rational& b) const { return abs(a - b); }

 private:
  PiecewiseLinearMap<Rational> f_;
  std::size_t cap_;
};

/// Double-precision evaluation of any RealMap. Powers are evaluated lazily by
/// iteration; zero sets come from grid scans refined by bisection.
class FloatKernel {
 public:
  using Scalar = double;
  static constexpr Mode mode = Mode::kFloat;

  explicit FloatKernel(RealMap f, ScanOptions opt = {}, int power = 1)
      : f_(std::move(f)), opt_(opt), power_(power) {}

  const RealMap& base() const { return f_; }
  const ScanOptions& options() const { return opt_; }
  int exponent() const { return power_; }
  Interval<double> domain() const { return f_.domain(); }

  std::optional<double> try_eval(double x) const;
  double eval(double x) const;

  FloatKernel power(int k) const { return FloatKernel(f_, opt_, power_ * k); }
  FloatKernel power_on(const Interval<double>&, int k) const { return power(k); }
  FloatKernel along(const std::vector<Interval<double>>& ks) const {
    return power(static_cast<int>(ks.size()));
  }

  Interval<double> image(const Interval<double>& I) const;
  std::pair<double, double> extrema(const Interval<double>& I) const;
  PreimageSet<double> preimages(const Interval<double>& I, double c) const;
  std::vector<Interval<double>> fixed_points(const Interval<double>& I) const;

  bool covers(const Interval<double>& I, const Interval<double>& J) const;
  bool contains(const Interval<double>& I, double x) const;
  bool same(double a, double b) const { return std::abs(a - b) <= opt_.period_tol; }
  bool residual_ok(double r) const { return r <= opt_.residual_tol; }
  double distance(double a, double b) const { return std::abs(a - b); }

 private:
  double slack(const Interval<double>& I) const;
  int scaled_samples(int base) const;

  RealMap f_;
  ScanOptions opt_;
  int power_;
};

}  // namespace sharkovsky
