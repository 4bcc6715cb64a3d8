#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "iet/exchange.hpp"
#include "iet/scalar.hpp"

namespace iet {

// Empirical equidistribution statistics for long orbits. These are evidence
// about invariant measures, never a proof of unique ergodicity.

inline constexpr int kDefaultRefinementCells = 64;

/// Partition of [0, |I|) into consecutive half-open cells.
class CellPartition {
 public:
  /// Right endpoints of the cells; strictly increasing, last one = |I|.
  explicit CellPartition(std::vector<Scalar> right_edges);
  static CellPartition uniform(const Scalar& total, int cells);

  int size() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Scalar> right_edges() const noexcept { return edges_; }
  /// 0-based cell containing x (assumes 0 <= x < |I|).
  int cell_of(const Scalar& x) const;
  /// Lebesgue share of each cell.
  std::vector<Scalar> expected_shares() const;

 private:
  std::vector<Scalar> edges_;
};

struct OrbitStats {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> counts;   // visits to I_j
  std::vector<Scalar> frequencies;     // counts / n
  std::vector<Scalar> expected;        // a_j / |I|
  Scalar discrepancy;                  // max_j |frequency_j - expected_j|
  int refinement_cells = 0;
  std::vector<std::uint64_t> refinement_counts;
  Scalar refinement_discrepancy;       // same statistic over the refinement
};

/// Max |count_k / n - expected_k|.
Scalar cell_discrepancy(std::span<const std::uint64_t> counts, std::uint64_t n, std::span<const Scalar> expected);

/// Exact orbit of length n from x0. Throws OutOfDomain, InvalidBound for n = 0.
OrbitStats visit_frequencies(const IntervalExchange& t, const Scalar& x0, std::uint64_t n,
                             const CellPartition& refinement);
OrbitStats visit_frequencies(const IntervalExchange& t, const Scalar& x0, std::uint64_t n,
                             int refinement_cells = kDefaultRefinementCells);

struct TrendPoint {
  std::uint64_t n;
  Scalar discrepancy;
};

/// Interval discrepancy at every checkpoint of one continued orbit.
/// Throws InvalidInput unless the schedule is strictly increasing and positive.
std::vector<TrendPoint> discrepancy_trend(const IntervalExchange& t, const Scalar& x0,
                                          std::span<const std::uint64_t> schedule);

}  // namespace iet
