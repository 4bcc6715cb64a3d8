#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "iet/permutation.hpp"
#include "iet/scalar.hpp"
#include "iet/suspension.hpp"

namespace iet {

enum class Monotonicity { StrictlyDecreasing, StrictlyIncreasing, NonMonotone, HasTies };
std::string_view to_string(Monotonicity m);

enum class Verdict {
  PositivePairByLemma,          // strictly decreasing slopes, curve simple
  PositivePairByMirroredLemma,  // strictly increasing slopes, chain roles exchanged
  InconclusiveNonMonotone,
  DegenerateTies,
};
inline constexpr std::size_t kVerdictCount = 4;
std::string_view to_string(Verdict v);

inline bool is_positive_pair(Verdict v) {
  return v == Verdict::PositivePairByLemma || v == Verdict::PositivePairByMirroredLemma;
}

/// Classifies kappa_i = b_i / a_i. Any equal neighbouring slopes give HasTies.
/// Throws DimensionMismatch or NonPositiveLength.
Monotonicity slope_monotonicity(std::span<const Scalar> lengths, std::span<const Scalar> heights);

struct CriterionReport {
  Monotonicity monotonicity;
  bool simple;
  /// Sign class of L itself.
  SignClass positivity;
  /// Sign class of L read in the orientation of the case: L for decreasing
  /// slopes, -L for increasing slopes. Equal to `positivity` otherwise.
  SignClass oriented_positivity;
  Verdict verdict;
  /// Which chain is the upper boundary of the polygon. Top for decreasing
  /// slopes, Bottom for the mirrored case; empty when not monotone.
  std::optional<Chain> upper_chain;
  std::optional<IntersectionWitness> witness;
  /// Positivity also needs a connection-free exchange; the criterion does not
  /// search for connections, so callers should run find_connections.
  bool connection_check_advised = true;
};

/// Runs the convexity criterion on (sigma, a, b). Throws ReduciblePermutation,
/// DimensionMismatch, NonPositiveLength, and LemmaViolation if strictly
/// monotone slopes ever produce a non-simple curve.
CriterionReport convexity_criterion(const Permutation& sigma, std::span<const Scalar> lengths,
                                    std::span<const Scalar> heights);

/// a_i = s^i, b_i = i s^{i-1}. Throws NonPositiveParameter for s <= 0 and
/// InvalidSize for d < 2.
std::pair<std::vector<Scalar>, std::vector<Scalar>> mahler_curve(int d, const Scalar& s);

/// Polynomial with rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients);

  Scalar operator()(const Scalar& s) const;
  Polynomial derivative() const;
  std::span<const Scalar> coefficients() const noexcept { return coefficients_; }

 private:
  std::vector<Scalar> coefficients_;
};

/// A curve s -> a(s) with polynomial coordinates. b = a'(s) is taken
/// symbolically.
class CurveSpec {
 public:
  /// Throws DimensionMismatch unless there is one polynomial per symbol.
  CurveSpec(int d, std::vector<Polynomial> coordinates);
  static CurveSpec mahler(int d);

  int size() const noexcept { return d_; }
  std::span<const Polynomial> coordinates() const noexcept { return coordinates_; }

  /// (a(s), a'(s)). Throws DomainViolation if some a_i(s) <= 0.
  std::pair<std::vector<Scalar>, std::vector<Scalar>> evaluate(const Scalar& s) const;

 private:
  int d_;
  std::vector<Polynomial> coordinates_;
  std::vector<Polynomial> derivatives_;
};

struct ScanSample {
  ApproxScalar s;
  Scalar s_exact;  // exact value of the double grid point
  Verdict verdict;
  Monotonicity monotonicity;
  bool simple;
};

struct ScanSummary {
  std::vector<ScanSample> samples;  // grid order
  std::array<std::size_t, kVerdictCount> counts{};

  double fraction(Verdict v) const;
  /// Samples whose verdict is not a positive pair.
  std::vector<ScanSample> exceptional() const;
};

/// Uniform grid from..to with `samples` points (endpoints included; one point
/// gives {from}). Throws InvalidInput for samples == 0 or non-finite bounds.
std::vector<ApproxScalar> uniform_grid(ApproxScalar from, ApproxScalar to, std::size_t samples);

/// Serial reference scan: every grid point is rationalized exactly and run
/// through convexity_criterion. Throws ReduciblePermutation, DimensionMismatch,
/// or DomainViolation (first offending grid point).
ScanSummary scan_curve(const CurveSpec& spec, const Permutation& sigma, std::span<const ApproxScalar> grid);

}  // namespace iet
