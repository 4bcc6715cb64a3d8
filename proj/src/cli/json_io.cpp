#include "cli/json_io.hpp"

#include "iet/error.hpp"

namespace iet::cli {

using nlohmann::json;

json rational_json(const Scalar& value) { return to_string(value); }

json rationals_json(std::span<const Scalar> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(rational_json(v));
  return out;
}

json point_json(const Point& p) { return json::array({rational_json(p.x), rational_json(p.y)}); }

Scalar rational_from_json(const json& value) {
  if (value.is_number_integer()) return parse_scalar(value.dump());
  if (value.is_string()) return parse_scalar(value.get<std::string>());
  throw Error(ErrorKind::InvalidInput, "expected a rational, got " + value.dump());
}

std::vector<Scalar> rationals_from_json(const json& values) {
  std::vector<Scalar> out;
  for (const auto& v : values) out.push_back(rational_from_json(v));
  return out;
}

CurveSpec curve_from_json(const json& value) {
  std::vector<Polynomial> coords;
  for (const auto& row : value.at("coeffs")) coords.emplace_back(rationals_from_json(row));
  return CurveSpec(value.at("d").get<int>(), std::move(coords));
}

json permutation_json(const Permutation& sigma) {
  return std::vector<int>(sigma.images().begin(), sigma.images().end());
}

json omega_json(const OmegaMatrix& om) { return om.rows(); }

json witness_json(const IntersectionWitness& w) {
  json out = {
      {"first", {{"chain", to_string(w.first_chain)}, {"segment", w.first_segment}}},
      {"second", {{"chain", to_string(w.second_chain)}, {"segment", w.second_segment}}},
      {"relation", to_string(w.relation.kind)},
  };
  if (w.relation.point) out["point"] = point_json(*w.relation.point);
  if (w.relation.overlap) {
    out["overlap"] = json::array({point_json(w.relation.overlap->from), point_json(w.relation.overlap->to)});
  }
  return out;
}

json intersection_json(const IntersectionReport& r) {
  return {{"simple", r.simple}, {"witness", r.witness ? witness_json(*r.witness) : json(nullptr)}};
}

namespace {

json points_json(std::span<const Point> points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(point_json(p));
  return out;
}

}  // namespace

json diagram_json(const SuspensionDiagram& d, const IntersectionReport& r) {
  return {
      {"perm", permutation_json(d.permutation())},
      {"lengths", rationals_json(d.lengths())},
      {"heights", rationals_json(d.heights())},
      {"zeta", points_json(d.zeta())},
      {"slopes", rationals_json(d.slopes())},
      {"top_chain", points_json(d.top_chain())},
      {"bottom_chain", points_json(d.bottom_chain())},
      {"return_profile", rationals_json(d.return_profile())},
      {"positivity", to_string(pointwise_positive(d))},
      {"orientation",
       {{"first_edges_top_above", d.first_edges_top_above()},
        {"first_top_steeper_than_last_bottom", d.first_top_steeper_than_last_bottom()}}},
      {"intersection", intersection_json(r)},
  };
}

json criterion_json(const CriterionReport& r) {
  return {
      {"monotonicity", to_string(r.monotonicity)},
      {"simple", r.simple},
      {"positivity", to_string(r.positivity)},
      {"oriented_positivity", to_string(r.oriented_positivity)},
      {"verdict", to_string(r.verdict)},
      {"upper_chain", r.upper_chain ? json(to_string(*r.upper_chain)) : json(nullptr)},
      {"witness", r.witness ? witness_json(*r.witness) : json(nullptr)},
      {"connection_check_advised", r.connection_check_advised},
  };
}

json scan_json(const ScanSummary& s) {
  json counts = json::object();
  json fractions = json::object();
  for (std::size_t k = 0; k < kVerdictCount; ++k) {
    const auto v = static_cast<Verdict>(k);
    counts[std::string(to_string(v))] = s.counts[k];
    fractions[std::string(to_string(v))] = s.fraction(v);
  }
  json exceptional = json::array();
  for (const auto& e : s.exceptional()) {
    exceptional.push_back({{"s", e.s},
                           {"s_exact", rational_json(e.s_exact)},
                           {"verdict", to_string(e.verdict)},
                           {"monotonicity", to_string(e.monotonicity)},
                           {"simple", e.simple}});
  }
  return {{"samples", s.samples.size()}, {"counts", counts}, {"fractions", fractions}, {"exceptional", exceptional}};
}

json orbit_json(const OrbitStats& s, const Scalar& x0) {
  return {
      {"empirical", true},
      {"x0", rational_json(x0)},
      {"n", s.n},
      {"counts", s.counts},
      {"frequencies", rationals_json(s.frequencies)},
      {"expected", rationals_json(s.expected)},
      {"discrepancy", rational_json(s.discrepancy)},
      {"discrepancy_approx", to_double(s.discrepancy)},
      {"refinement",
       {{"cells", s.refinement_cells},
        {"counts", s.refinement_counts},
        {"discrepancy", rational_json(s.refinement_discrepancy)},
        {"discrepancy_approx", to_double(s.refinement_discrepancy)}}},
  };
}

json trend_json(std::span<const TrendPoint> trend) {
  json out = json::array();
  for (const auto& p : trend) {
    out.push_back({{"n", p.n},
                   {"discrepancy", rational_json(p.discrepancy)},
                   {"discrepancy_approx", to_double(p.discrepancy)}});
  }
  return out;
}

json connections_json(std::span<const Connection> connections) {
  json out = json::array();
  for (const auto& c : connections) out.push_back({{"m", c.m}, {"source", c.source}, {"target", c.target}});
  return out;
}

}  // namespace iet::cli
