#include "sharkovsky/interval_maps.hpp"

#include <cmath>
#include <limits>

namespace sharkovsky {

PolynomialMap::PolynomialMap(std::vector<double> coeffs, Interval<double> domain)
    : coeffs_(std::move(coeffs)), domain_(domain) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  require(coeffs_.size() >= 2, ErrorKind::kInvalidArgument, "polynomial map needs degree >= 1");
  for (double c : coeffs_) require(std::isfinite(c), ErrorKind::kInvalidArgument, "non-finite coefficient");
}

double PolynomialMap::operator()(double x) const {
  require(domain_.contains(x), ErrorKind::kDomainViolation, "x = " + to_string(x) + " outside domain");
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealMap::RealMap(std::function<double(double)> fn, Interval<double> domain, std::string name)
    : fn_(std::move(fn)), domain_(domain), name_(std::move(name)) {}

std::optional<double> RealMap::try_eval(double x) const {
  if (!std::isfinite(x)) return std::nullopt;
  const double slack = 1e-12 * (1.0 + std::abs(domain_.lo) + std::abs(domain_.hi));
  if (x < domain_.lo) {
    if (x < domain_.lo - slack) return std::nullopt;
    x = domain_.lo;
  } else if (x > domain_.hi) {
    if (x > domain_.hi + slack) return std::nullopt;
    x = domain_.hi;
  }
  return fn_(x);
}

double RealMap::operator()(double x) const {
  auto y = try_eval(x);
  require(y.has_value(), ErrorKind::kDomainViolation, "x = " + to_string(x) + " outside domain of " + name_);
  return *y;
}

RealMap to_real_map(const PolynomialMap& p) {
  return RealMap([p](double x) { return p(x); }, p.domain(), "poly");
}

RealMap to_real_map(const PiecewiseLinearMap<double>& f) {
  return RealMap([f](double x) { return f(x); }, f.domain(), "pl");
}

RealMap to_real_map(const PiecewiseLinearMap<Rational>& f) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& x : f.xs()) xs.push_back(to_double(x));
  for (const auto& y : f.ys()) ys.push_back(to_double(y));
  return to_real_map(PiecewiseLinearMap<double>(std::move(xs), std::move(ys)));
}

PiecewiseLinearMap<Rational> connect_the_dots(const CyclicPermutation& pi) {
  std::vector<Rational> points;
  for (int i = 1; i <= pi.size(); ++i) points.emplace_back(i);
  return connect_the_dots(points, pi);
}

}  // namespace sharkovsky
