#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "iet/criterion.hpp"
#include "iet/diagnostics.hpp"
#include "iet/exchange.hpp"
#include "iet/permutation.hpp"
#include "iet/scalar.hpp"
#include "iet/suspension.hpp"

namespace iet::cli {

// Rationals are written as "p/q" strings. Keys come out sorted because
// nlohmann::json objects are ordered maps, so dumps are byte-stable.

nlohmann::json rational_json(const Scalar& value);
nlohmann::json rationals_json(std::span<const Scalar> values);
nlohmann::json point_json(const Point& p);

/// Accepts a "p/q"/decimal string or a JSON integer.
Scalar rational_from_json(const nlohmann::json& value);
std::vector<Scalar> rationals_from_json(const nlohmann::json& values);
CurveSpec curve_from_json(const nlohmann::json& value);

nlohmann::json permutation_json(const Permutation& sigma);
nlohmann::json omega_json(const OmegaMatrix& om);
nlohmann::json witness_json(const IntersectionWitness& w);
nlohmann::json intersection_json(const IntersectionReport& r);
nlohmann::json diagram_json(const SuspensionDiagram& d, const IntersectionReport& r);
nlohmann::json criterion_json(const CriterionReport& r);
nlohmann::json scan_json(const ScanSummary& s);
nlohmann::json orbit_json(const OrbitStats& s, const Scalar& x0);
nlohmann::json trend_json(std::span<const TrendPoint> trend);
nlohmann::json connections_json(std::span<const Connection> connections);

}  // namespace iet::cli
