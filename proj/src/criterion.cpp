#include "iet/criterion.hpp"

#include <algorithm>
#include <cmath>

#include "iet/error.hpp"

namespace iet {

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::StrictlyDecreasing: return "StrictlyDecreasing";
    case Monotonicity::StrictlyIncreasing: return "StrictlyIncreasing";
    case Monotonicity::NonMonotone: return "NonMonotone";
    case Monotonicity::HasTies: return "HasTies";
  }
  return "Unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::PositivePairByLemma: return "PositivePairByLemma";
    case Verdict::PositivePairByMirroredLemma: return "PositivePairByMirroredLemma";
    case Verdict::InconclusiveNonMonotone: return "InconclusiveNonMonotone";
    case Verdict::DegenerateTies: return "DegenerateTies";
  }
  return "Unknown";
}

Monotonicity slope_monotonicity(std::span<const Scalar> raw_lengths, std::span<const Scalar> raw_heights) {
  if (raw_lengths.size() != raw_heights.size()) {
    throw Error(ErrorKind::DimensionMismatch, "lengths and heights differ in size");
  }
  const auto lengths = canonical({raw_lengths.begin(), raw_lengths.end()});
  const auto heights = canonical({raw_heights.begin(), raw_heights.end()});
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (sgn(lengths[i]) <= 0) {
      throw Error(ErrorKind::NonPositiveLength,
                  "length a_" + std::to_string(i + 1) + " = " + to_string(lengths[i]) + " is not positive");
    }
  }
  bool rises = false, falls = false;
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    // kappa_{i-1} vs kappa_i without division: a_i > 0.
    const int c = cmp(heights[i - 1] * lengths[i], heights[i] * lengths[i - 1]);
    if (c == 0) return Monotonicity::HasTies;
    (c > 0 ? falls : rises) = true;
  }
  if (rises && falls) return Monotonicity::NonMonotone;
  return rises ? Monotonicity::StrictlyIncreasing : Monotonicity::StrictlyDecreasing;
}

namespace {

SignClass negated(SignClass c) {
  switch (c) {
    case SignClass::AllPositive: return SignClass::AllNegative;
    case SignClass::AllNegative: return SignClass::AllPositive;
    default: return c;
  }
}

}  // namespace

CriterionReport convexity_criterion(const Permutation& sigma, std::span<const Scalar> lengths,
                                    std::span<const Scalar> heights) {
  if (!is_irreducible(sigma)) {
    throw Error(ErrorKind::ReduciblePermutation, "permutation " + sigma.to_string() + " is reducible");
  }
  if (static_cast<int>(lengths.size()) != sigma.size() || static_cast<int>(heights.size()) != sigma.size()) {
    throw Error(ErrorKind::DimensionMismatch, "vector sizes do not match the permutation");
  }
  const Monotonicity mono = slope_monotonicity(lengths, heights);
  const SuspensionDiagram diagram(sigma, {lengths.begin(), lengths.end()}, {heights.begin(), heights.end()});
  IntersectionReport intersections = self_intersects(diagram);

  CriterionReport report{};
  report.monotonicity = mono;
  report.simple = intersections.simple;
  report.witness = std::move(intersections.witness);
  report.positivity = pointwise_positive(diagram);
  report.oriented_positivity = report.positivity;

  switch (mono) {
    case Monotonicity::StrictlyDecreasing:
      report.verdict = Verdict::PositivePairByLemma;
      report.upper_chain = Chain::Top;
      break;
    case Monotonicity::StrictlyIncreasing:
      // Identity-order chain is now the lower convex boundary; the union is
      // the same closed curve, so simplicity carries over unchanged.
      report.verdict = Verdict::PositivePairByMirroredLemma;
      report.upper_chain = Chain::Bottom;
      report.oriented_positivity = negated(report.positivity);
      break;
    case Monotonicity::NonMonotone:
      report.verdict = Verdict::InconclusiveNonMonotone;
      break;
    case Monotonicity::HasTies:
      report.verdict = Verdict::DegenerateTies;
      break;
  }

  if (is_positive_pair(report.verdict) && !report.simple) {
    const auto& w = *report.witness;
    throw Error(ErrorKind::LemmaViolation,
                "strictly monotone slopes gave a self-intersecting curve: sigma=" + sigma.to_string() + ", " +
                    std::string(to_string(w.first_chain)) + " segment " + std::to_string(w.first_segment) + " vs " +
                    std::string(to_string(w.second_chain)) + " segment " + std::to_string(w.second_segment) + " (" +
                    std::string(to_string(w.relation.kind)) + ")");
  }
  return report;
}

std::pair<std::vector<Scalar>, std::vector<Scalar>> mahler_curve(int d, const Scalar& raw_s) {
  const Scalar s = canonical(raw_s);
  if (d < 2) throw Error(ErrorKind::InvalidSize, "Mahler curve needs d >= 2");
  if (sgn(s) <= 0) throw Error(ErrorKind::NonPositiveParameter, "parameter s = " + to_string(s) + " is not positive");
  std::vector<Scalar> a(d), b(d);
  Scalar power = 1;  // s^{i-1}
  for (int i = 1; i <= d; ++i) {
    b[i - 1] = i * power;
    power *= s;
    a[i - 1] = power;
  }
  return {std::move(a), std::move(b)};
}

Polynomial::Polynomial(std::vector<Scalar> coefficients) : coefficients_(canonical(std::move(coefficients))) {
  while (!coefficients_.empty() && sgn(coefficients_.back()) == 0) coefficients_.pop_back();
}

Scalar Polynomial::operator()(const Scalar& raw_s) const {
  const Scalar s = canonical(raw_s);
  Scalar acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> out;
  for (std::size_t k = 1; k < coefficients_.size(); ++k) out.push_back(static_cast<long>(k) * coefficients_[k]);
  return Polynomial(std::move(out));
}

CurveSpec::CurveSpec(int d, std::vector<Polynomial> coordinates) : d_(d), coordinates_(std::move(coordinates)) {
  if (d_ < 1 || static_cast<int>(coordinates_.size()) != d_) {
    throw Error(ErrorKind::DimensionMismatch,
                "curve declares d=" + std::to_string(d_) + " but has " + std::to_string(coordinates_.size()) +
                    " coordinate polynomials");
  }
  derivatives_.reserve(coordinates_.size());
  for (const auto& p : coordinates_) derivatives_.push_back(p.derivative());
}

CurveSpec CurveSpec::mahler(int d) {
  if (d < 2) throw Error(ErrorKind::InvalidSize, "Mahler curve needs d >= 2");
  std::vector<Polynomial> coords;
  for (int i = 1; i <= d; ++i) {
    std::vector<Scalar> c(i + 1, Scalar(0));
    c[i] = 1;
    coords.emplace_back(std::move(c));
  }
  return CurveSpec(d, std::move(coords));
}

std::pair<std::vector<Scalar>, std::vector<Scalar>> CurveSpec::evaluate(const Scalar& s) const {
  std::vector<Scalar> a(d_), b(d_);
  for (int i = 0; i < d_; ++i) {
    a[i] = coordinates_[i](s);
    if (sgn(a[i]) <= 0) {
      throw Error(ErrorKind::DomainViolation, "a_" + std::to_string(i + 1) + "(" + to_string(s) + ") = " +
                                                  to_string(a[i]) + " is not positive");
    }
    b[i] = derivatives_[i](s);
  }
  return {std::move(a), std::move(b)};
}

double ScanSummary::fraction(Verdict v) const {
  if (samples.empty()) return 0.0;
  return static_cast<double>(counts[static_cast<std::size_t>(v)]) / static_cast<double>(samples.size());
}

std::vector<ScanSample> ScanSummary::exceptional() const {
  std::vector<ScanSample> out;
  std::copy_if(samples.begin(), samples.end(), std::back_inserter(out),
               [](const ScanSample& s) { return !is_positive_pair(s.verdict); });
  return out;
}

std::vector<ApproxScalar> uniform_grid(ApproxScalar from, ApproxScalar to, std::size_t samples) {
  if (samples == 0) throw Error(ErrorKind::InvalidInput, "grid needs at least one sample");
  if (!std::isfinite(from) || !std::isfinite(to)) throw Error(ErrorKind::InvalidInput, "grid bounds must be finite");
  std::vector<ApproxScalar> grid(samples);
  if (samples == 1) {
    grid[0] = from;
    return grid;
  }
  const auto last = static_cast<double>(samples - 1);
  for (std::size_t k = 0; k < samples; ++k) {
    grid[k] = k + 1 == samples ? to : from + (to - from) * (static_cast<double>(k) / last);
  }
  return grid;
}

ScanSummary scan_curve(const CurveSpec& spec, const Permutation& sigma, std::span<const ApproxScalar> grid) {
  if (!is_irreducible(sigma)) {
    throw Error(ErrorKind::ReduciblePermutation, "permutation " + sigma.to_string() + " is reducible");
  }
  if (spec.size() != sigma.size()) {
    throw Error(ErrorKind::DimensionMismatch, "curve and permutation sizes differ");
  }
  ScanSummary summary;
  summary.samples.reserve(grid.size());
  for (const ApproxScalar s : grid) {
    Scalar exact = from_double(s);
    const auto [a, b] = spec.evaluate(exact);
    const CriterionReport r = convexity_criterion(sigma, a, b);
    summary.samples.push_back({s, std::move(exact), r.verdict, r.monotonicity, r.simple});
    ++summary.counts[static_cast<std::size_t>(r.verdict)];
  }
  return summary;
}

}  // namespace iet
