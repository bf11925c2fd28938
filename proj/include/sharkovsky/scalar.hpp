#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace sharkovsky {

// Arbitrary-precision rational; the exact-mode scalar.
using Rational = mpq_class;

// Parses "p/q", "p", or a finite decimal such as "2.5" into a canonical rational.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

// Round-trippable decimal form (17 significant digits).
std::string to_string(double value);

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational from_double(double v) { return Rational(v); }
  static Rational abs(const Rational& v) { return ::abs(v); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double from_double(double v) { return v; }
  static double abs(double v) { return std::abs(v); }
};

template <typename Scalar>
inline constexpr bool is_exact_v = ScalarTraits<Scalar>::exact;

}  // namespace sharkovsky
