#include "sharkovsky/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace sharkovsky {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string json_scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  fail(ErrorKind::kParse, "expected a number or numeric string, got " + v.dump());
}

double to_finite_double(const json& v) {
  if (v.is_number()) return v.get<double>();
  const std::string text = json_scalar_text(v);
  const Rational r = parse_rational(text);
  if (text.find('/') != std::string::npos) return to_double(r);
  return std::strtod(text.c_str(), nullptr);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    require(all_digits(num) && all_digits(den), ErrorKind::kParse, "malformed rational '" + original + "'");
    value = Rational(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
    require(value.get_den() != 0, ErrorKind::kParse, "zero denominator in '" + original + "'");
    value.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      require(all_digits(exp_text) && exp_text.size() < 6, ErrorKind::kParse, "malformed exponent in '" + original + "'");
      exponent = std::stol(std::string(exp_text)) * (exp_negative ? -1 : 1);
      text = text.substr(0, e);
    }
    std::string digits(text);
    if (auto dot = digits.find('.'); dot != std::string::npos) {
      exponent -= static_cast<long>(digits.size() - dot - 1);
      digits.erase(dot, 1);
    }
    require(all_digits(digits), ErrorKind::kParse, "malformed number '" + original + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    value = exponent >= 0 ? Rational(mpz_class(digits, 10) * scale) : Rational(mpz_class(digits, 10), scale);
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::kParse, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, path + ": " + e.what());
  }
}

CyclicPermutation permutation_from_json(const json& j) {
  try {
    const auto images = j.at("images").get<std::vector<int>>();
    if (j.contains("n")) {
      require(j.at("n").get<int>() == static_cast<int>(images.size()), ErrorKind::kParse,
              "\"n\" does not match the number of images");
    }
    return validate(images);
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("permutation: ") + e.what());
  }
}

json to_json(const CyclicPermutation& pi) { return {{"n", pi.size()}, {"images", pi.images()}}; }

const PiecewiseLinearMap<Rational>& MapSpec::exact() const {
  require(is_exact(), ErrorKind::kPrecondition, "exact mode needs a \"pl\" map with rational breakpoints");
  return std::get<PiecewiseLinearMap<Rational>>(map);
}

RealMap MapSpec::real() const {
  return std::visit([](const auto& m) { return to_real_map(m); }, map);
}

Interval<double> MapSpec::domain() const {
  return std::visit([](const auto& m) { return interval_cast<double>(m.domain()); }, map);
}

MapSpec map_from_json(const json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "pl") {
      std::vector<Rational> xs;
      std::vector<Rational> ys;
      for (const auto& bp : j.at("breakpoints")) {
        require(bp.is_array() && bp.size() == 2, ErrorKind::kParse, "breakpoint must be a pair");
        xs.push_back(parse_rational(json_scalar_text(bp[0])));
        ys.push_back(parse_rational(json_scalar_text(bp[1])));
      }
      return {PiecewiseLinearMap<Rational>(std::move(xs), std::move(ys))};
    }
    if (kind == "poly") {
      std::vector<double> coeffs;
      for (const auto& c : j.at("coeffs")) coeffs.push_back(to_finite_double(c));
      const auto& dom = j.at("domain");
      require(dom.is_array() && dom.size() == 2, ErrorKind::kParse, "domain must be [lo, hi]");
      return {PolynomialMap(std::move(coeffs), {to_finite_double(dom[0]), to_finite_double(dom[1])})};
    }
    if (kind == "table") {
      std::vector<double> xs;
      std::vector<double> ys;
      for (const auto& x : j.at("xs")) xs.push_back(to_finite_double(x));
      for (const auto& y : j.at("ys")) ys.push_back(to_finite_double(y));
      return {TabulatedMap(std::move(xs), std::move(ys))};
    }
    fail(ErrorKind::kParse, "unknown map kind '" + kind + "'");
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("map: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse) throw;
    fail(ErrorKind::kParse, std::string("map: ") + e.what());
  }
}

json to_json(const PiecewiseLinearMap<Rational>& f) {
  json bps = json::array();
  for (std::size_t i = 0; i < f.xs().size(); ++i) bps.push_back({to_string(f.xs()[i]), to_string(f.ys()[i])});
  return {{"kind", "pl"}, {"breakpoints", bps}};
}

std::vector<Rational> exact_points_from_json(const json& j) {
  try {
    std::vector<Rational> out;
    for (const auto& p : j.at("points")) out.push_back(parse_rational(json_scalar_text(p)));
    return out;
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("orbit: ") + e.what());
  }
}

std::vector<double> float_points_from_json(const json& j) {
  try {
    std::vector<double> out;
    for (const auto& p : j.at("points")) out.push_back(to_finite_double(p));
    return out;
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("orbit: ") + e.what());
  }
}

json to_json(const CoveringLoopPlan& plan) {
  json segments = json::array();
  for (const auto& s : plan.segments) segments.push_back({s.lo, s.hi});
  return {{"length", plan.length()},
          {"period", plan.period},
          {"segments", segments},
          {"interpretation", to_string(plan.map)},
          {"kind", to_string(plan.kind)}};
}

json to_json(const SegmentChain& chain) {
  json steps = json::array();
  for (const auto& s : chain.steps) steps.push_back({s.lo, s.hi});
  return {{"steps", steps}, {"closed", chain.closed}, {"text", to_string(std::span<const Segment>(chain.steps))}};
}

}  // namespace sharkovsky
