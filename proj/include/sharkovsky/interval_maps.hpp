#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sharkovsky/error.hpp"
#include "sharkovsky/interval.hpp"
#include "sharkovsky/permutation.hpp"
#include "sharkovsky/scalar.hpp"

namespace sharkovsky {

inline constexpr std::size_t kDefaultBlowupCap = 1'000'000;

/// Continuous map that is affine between consecutive breakpoints (x_i, y_i).
/// With Scalar = Rational every operation is exact.
template <typename Scalar>
class PiecewiseLinearMap {
 public:
  PiecewiseLinearMap(std::vector<Scalar> xs, std::vector<Scalar> ys) : xs_(std::move(xs)), ys_(std::move(ys)) {
    require(xs_.size() == ys_.size(), ErrorKind::kInvalidArgument, "breakpoint x/y counts differ");
    require(xs_.size() >= 2, ErrorKind::kInvalidArgument, "a piecewise-linear map needs at least two breakpoints");
    for (std::size_t i = 1; i < xs_.size(); ++i) {
      require(xs_[i - 1] < xs_[i], ErrorKind::kInvalidArgument, "breakpoint abscissae must increase strictly");
    }
  }

  const std::vector<Scalar>& xs() const { return xs_; }
  const std::vector<Scalar>& ys() const { return ys_; }
  std::size_t pieces() const { return xs_.size() - 1; }
  Interval<Scalar> domain() const { return {xs_.front(), xs_.back()}; }

  Scalar operator()(const Scalar& x) const {
    require(domain().contains(x), ErrorKind::kDomainViolation, "x = " + to_string(x) + " outside domain");
    const std::size_t j = piece_of(x);
    if (x == xs_[j]) return ys_[j];
    if (x == xs_[j + 1]) return ys_[j + 1];
    return ys_[j] + (x - xs_[j]) * (ys_[j + 1] - ys_[j]) / (xs_[j + 1] - xs_[j]);
  }

  Scalar slope(std::size_t j) const { return (ys_[j + 1] - ys_[j]) / (xs_[j + 1] - xs_[j]); }

  // Index j of the piece [x_j, x_{j+1}] containing x (the left one at interior breakpoints).
  std::size_t piece_of(const Scalar& x) const {
    auto it = std::lower_bound(xs_.begin() + 1, xs_.end() - 1, x);
    return static_cast<std::size_t>(it - xs_.begin()) - 1;
  }

  PiecewiseLinearMap restricted(const Interval<Scalar>& I) const {
    require(domain().contains(I), ErrorKind::kDomainViolation, "restriction interval outside domain");
    require(!I.degenerate(), ErrorKind::kDegenerate, "cannot restrict to a single point");
    std::vector<Scalar> xs{I.lo};
    std::vector<Scalar> ys{(*this)(I.lo)};
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      if (I.lo < xs_[i] && xs_[i] < I.hi) {
        xs.push_back(xs_[i]);
        ys.push_back(ys_[i]);
      }
    }
    xs.push_back(I.hi);
    ys.push_back((*this)(I.hi));
    return PiecewiseLinearMap(std::move(xs), std::move(ys));
  }

  /// (*this) o inner. The range of `inner` must lie in this map's domain.
  PiecewiseLinearMap after(const PiecewiseLinearMap& inner, std::size_t cap = kDefaultBlowupCap) const {
    const auto dom = domain();
    std::vector<Scalar> xs;
    std::vector<Scalar> ys;
    auto push = [&](const Scalar& x, const Scalar& y) {
      xs.push_back(x);
      ys.push_back(y);
      require(xs.size() <= cap + 1, ErrorKind::kBlowupCap,
              "composition exceeds " + std::to_string(cap) + " pieces");
    };
    for (std::size_t j = 0; j < inner.pieces(); ++j) {
      const Scalar& x0 = inner.xs_[j];
      const Scalar& x1 = inner.xs_[j + 1];
      const Scalar& y0 = inner.ys_[j];
      const Scalar& y1 = inner.ys_[j + 1];
      if (!dom.contains(y0) || !dom.contains(y1)) {
        fail(ErrorKind::kDomainEscape, "composition leaves the domain near x = " + to_string(x0));
      }
      push(x0, (*this)(y0));
      if (y0 == y1) continue;
      const bool up = y0 < y1;
      const Scalar& lo = up ? y0 : y1;
      const Scalar& hi = up ? y1 : y0;
      auto first = std::upper_bound(xs_.begin(), xs_.end(), lo);
      auto last = std::lower_bound(xs_.begin(), xs_.end(), hi);
      std::vector<std::size_t> inside;
      for (auto it = first; it < last; ++it) inside.push_back(static_cast<std::size_t>(it - xs_.begin()));
      if (!up) std::reverse(inside.begin(), inside.end());
      for (std::size_t k : inside) {
        const Scalar& t = xs_[k];
        push(x0 + (t - y0) * (x1 - x0) / (y1 - y0), ys_[k]);
      }
    }
    push(inner.xs_.back(), (*this)(inner.ys_.back()));
    PiecewiseLinearMap out(std::move(xs), std::move(ys));
    out.simplify();
    return out;
  }

  /// f^k on the whole domain (k = 0 gives the identity). Requires f(domain) within domain.
  PiecewiseLinearMap power(int k, std::size_t cap = kDefaultBlowupCap) const {
    require(k >= 0, ErrorKind::kInvalidArgument, "negative power");
    if (k == 0) return PiecewiseLinearMap({xs_.front(), xs_.back()}, {xs_.front(), xs_.back()});
    PiecewiseLinearMap out = *this;
    for (int i = 1; i < k; ++i) out = after(out, cap);
    return out;
  }

  // Drops interior breakpoints where adjacent pieces are collinear.
  void simplify() {
    std::vector<Scalar> xs{xs_.front()};
    std::vector<Scalar> ys{ys_.front()};
    for (std::size_t i = 1; i + 1 < xs_.size(); ++i) {
      const Scalar lhs = (ys_[i] - ys.back()) * (xs_[i + 1] - xs_[i]);
      const Scalar rhs = (ys_[i + 1] - ys_[i]) * (xs_[i] - xs.back());
      if (lhs == rhs) continue;
      xs.push_back(xs_[i]);
      ys.push_back(ys_[i]);
    }
    xs.push_back(xs_.back());
    ys.push_back(ys_.back());
    xs_ = std::move(xs);
    ys_ = std::move(ys);
  }

  friend bool operator==(const PiecewiseLinearMap&, const PiecewiseLinearMap&) = default;

 private:
  std::vector<Scalar> xs_;
  std::vector<Scalar> ys_;
};

/// Tabulated-continuous maps are linear interpolation through (xs, ys).
using TabulatedMap = PiecewiseLinearMap<double>;

/// Sum of coeffs[k] * x^k, evaluated by Horner's scheme.
class PolynomialMap {
 public:
  PolynomialMap(std::vector<double> coeffs, Interval<double> domain);

  const std::vector<double>& coeffs() const { return coeffs_; }
  Interval<double> domain() const { return domain_; }
  double operator()(double x) const;

 private:
  std::vector<double> coeffs_;
  Interval<double> domain_;
};

/// Type-erased double-precision map; the common currency of float mode.
class RealMap {
 public:
  RealMap(std::function<double(double)> fn, Interval<double> domain, std::string name);

  Interval<double> domain() const { return domain_; }
  const std::string& name() const { return name_; }

  // Arguments within a few ulps of the domain are clamped onto it; anything
  // farther out yields nullopt.
  std::optional<double> try_eval(double x) const;
  double operator()(double x) const;

 private:
  std::function<double(double)> fn_;
  Interval<double> domain_;
  std::string name_;
};

RealMap to_real_map(const PolynomialMap& p);
RealMap to_real_map(const PiecewiseLinearMap<double>& f);
RealMap to_real_map(const PiecewiseLinearMap<Rational>& f);

template <typename Map, typename Scalar>
Scalar evaluate(const Map& f, const Scalar& x) {
  return f(x);
}

/// f^k(x); DomainEscape names the first step whose argument left the domain.
template <typename Map, typename Scalar>
Scalar iterate(const Map& f, Scalar x, int k) {
  require(k >= 0, ErrorKind::kInvalidArgument, "negative iteration count");
  const auto dom = f.domain();
  for (int j = 0; j < k; ++j) {
    if (!dom.contains(x)) {
      fail(ErrorKind::kDomainEscape, "orbit left the domain at step " + std::to_string(j) + " (x = " + to_string(x) + ")");
    }
    x = f(x);
  }
  return x;
}

/// PL map through (points[i], points[pi(i)]).
template <typename Scalar>
PiecewiseLinearMap<Scalar> connect_the_dots(const std::vector<Scalar>& points, const CyclicPermutation& pi) {
  require(static_cast<int>(points.size()) == pi.size(), ErrorKind::kInvalidArgument,
          "orbit has " + std::to_string(points.size()) + " points but the permutation has length " +
              std::to_string(pi.size()));
  std::vector<Scalar> ys;
  ys.reserve(points.size());
  for (int i = 1; i <= pi.size(); ++i) ys.push_back(points[static_cast<std::size_t>(pi(i) - 1)]);
  return PiecewiseLinearMap<Scalar>(points, std::move(ys));
}

/// Standard model on the integer points 1..n.
PiecewiseLinearMap<Rational> connect_the_dots(const CyclicPermutation& pi);

}  // namespace sharkovsky
