#pragma once

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "sharkovsky/interval_maps.hpp"
#include "sharkovsky/itinerary.hpp"
#include "sharkovsky/loop_builder.hpp"
#include "sharkovsky/orbit.hpp"
#include "sharkovsky/permutation.hpp"
#include "sharkovsky/verifier.hpp"

namespace sharkovsky {

using json = nlohmann::json;

json read_json_file(const std::string& path);

CyclicPermutation permutation_from_json(const json& j);
json to_json(const CyclicPermutation& pi);

// A map as read from disk: "pl" (exact rationals), "poly", or "table".
struct MapSpec {
  std::variant<PiecewiseLinearMap<Rational>, PolynomialMap, TabulatedMap> map;

  bool is_exact() const { return std::holds_alternative<PiecewiseLinearMap<Rational>>(map); }
  const PiecewiseLinearMap<Rational>& exact() const;
  RealMap real() const;
  Interval<double> domain() const;
};

MapSpec map_from_json(const json& j);
json to_json(const PiecewiseLinearMap<Rational>& f);

// Orbit points as written, before the permutation is induced from a map.
std::vector<Rational> exact_points_from_json(const json& j);
std::vector<double> float_points_from_json(const json& j);

template <typename Scalar>
json to_json(const Orbit<Scalar>& orbit) {
  json points = json::array();
  for (const auto& p : orbit.points) points.push_back(to_string(p));
  return {{"points", points}, {"images", orbit.permutation.images()}};
}

json to_json(const CoveringLoopPlan& plan);
json to_json(const SegmentChain& chain);

template <typename Scalar>
json to_json(const Interval<Scalar>& iv) {
  return json::array({to_string(iv.lo), to_string(iv.hi)});
}

template <typename Scalar>
json to_json(const PeriodicPointCertificate<Scalar>& cert) {
  json itinerary = json::array();
  for (const auto& iv : cert.itinerary) itinerary.push_back(to_json(iv));
  return {{"gamma", to_string(cert.gamma)},
          {"loop_length", cert.loop_length},
          {"residual", to_string(cert.residual)},
          {"least_period", cert.least_period},
          {"itinerary", itinerary}};
}

template <typename Scalar>
json to_json(const ForcingReport<Scalar>& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json row{{"period", e.period}, {"status", to_string(e.status)}};
    if (e.status == EntryStatus::kNotForced) {
      entries.push_back(row);
      continue;
    }
    row["construction"] = to_string(e.construction);
    if (e.point) {
      row["point"] = to_string(*e.point);
      row["residual"] = to_string(e.residual);
      row["least_period"] = e.least_period;
      row["map_power"] = e.map_power;
      row["loop_length"] = e.loop_length;
    }
    if (!e.reason.empty()) row["reason"] = e.reason;
    entries.push_back(row);
  }
  return {{"source_period", report.source_period},
          {"cap", report.cap},
          {"mode", to_string(report.mode)},
          {"entries", entries}};
}

/// Rows `period,point,residual,construction` for the entries that carry a point.
template <typename Scalar>
std::string to_csv(const ForcingReport<Scalar>& report) {
  std::string out = "period,point,residual,construction\n";
  for (const auto& e : report.entries) {
    if (!e.point || e.status == EntryStatus::kFailed) continue;
    out += std::to_string(e.period) + "," + to_string(*e.point) + "," + to_string(e.residual) + "," +
           to_string(e.construction) + "\n";
  }
  return out;
}

}  // namespace sharkovsky
