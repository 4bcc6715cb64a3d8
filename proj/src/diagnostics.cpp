#include "iet/diagnostics.hpp"

#include <algorithm>

#include "iet/error.hpp"

namespace iet {

CellPartition::CellPartition(std::vector<Scalar> right_edges) : edges_(canonical(std::move(right_edges))) {
  if (edges_.empty()) throw Error(ErrorKind::InvalidInput, "partition needs at least one cell");
  Scalar previous = 0;
  for (const auto& e : edges_) {
    if (e <= previous) throw Error(ErrorKind::InvalidInput, "cell edges must be strictly increasing and positive");
    previous = e;
  }
}

CellPartition CellPartition::uniform(const Scalar& total, int cells) {
  if (cells < 1) throw Error(ErrorKind::InvalidInput, "refinement needs at least one cell");
  std::vector<Scalar> edges(cells);
  for (int k = 1; k <= cells; ++k) edges[k - 1] = canonical(total) * k / cells;
  return CellPartition(std::move(edges));
}

int CellPartition::cell_of(const Scalar& x) const {
  return static_cast<int>(std::upper_bound(edges_.begin(), edges_.end(), canonical(x)) - edges_.begin());
}

std::vector<Scalar> CellPartition::expected_shares() const {
  std::vector<Scalar> shares(edges_.size());
  Scalar left = 0;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    shares[k] = (edges_[k] - left) / edges_.back();
    left = edges_[k];
  }
  return shares;
}

namespace {

Scalar frequency(std::uint64_t count, std::uint64_t n) {
  Scalar f(mpz_class(std::to_string(count)), mpz_class(std::to_string(n)));
  f.canonicalize();
  return f;
}

std::vector<Scalar> interval_shares(const IntervalExchange& t) {
  std::vector<Scalar> shares;
  for (const auto& a : t.lengths()) shares.push_back(a / t.total_length());
  return shares;
}

}  // namespace

Scalar cell_discrepancy(std::span<const std::uint64_t> counts, std::uint64_t n, std::span<const Scalar> expected) {
  Scalar worst = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    Scalar dev = abs(frequency(counts[k], n) - canonical(expected[k]));
    if (dev > worst) worst = std::move(dev);
  }
  return worst;
}

OrbitStats visit_frequencies(const IntervalExchange& t, const Scalar& x0, std::uint64_t n,
                             const CellPartition& refinement) {
  if (n == 0) throw Error(ErrorKind::InvalidBound, "orbit length must be at least 1");
  if (refinement.right_edges().back() != t.total_length()) {
    throw Error(ErrorKind::InvalidInput, "refinement does not cover [0, |I|)");
  }
  t.interval_of(x0);

  OrbitStats stats;
  stats.n = n;
  stats.counts.assign(t.size(), 0);
  stats.refinement_cells = refinement.size();
  stats.refinement_counts.assign(refinement.size(), 0);

  const auto translations = t.translations();
  Scalar x = canonical(x0);
  for (std::uint64_t step = 0; step < n; ++step) {
    const int j = t.interval_of(x);
    ++stats.counts[j - 1];
    ++stats.refinement_counts[refinement.cell_of(x)];
    x += translations[j - 1];
  }

  for (const auto c : stats.counts) stats.frequencies.push_back(frequency(c, n));
  stats.expected = interval_shares(t);
  stats.discrepancy = cell_discrepancy(stats.counts, n, stats.expected);
  stats.refinement_discrepancy = cell_discrepancy(stats.refinement_counts, n, refinement.expected_shares());
  return stats;
}

OrbitStats visit_frequencies(const IntervalExchange& t, const Scalar& x0, std::uint64_t n, int refinement_cells) {
  return visit_frequencies(t, x0, n, CellPartition::uniform(t.total_length(), refinement_cells));
}

std::vector<TrendPoint> discrepancy_trend(const IntervalExchange& t, const Scalar& x0,
                                          std::span<const std::uint64_t> schedule) {
  std::uint64_t previous = 0;
  for (const auto n : schedule) {
    if (n <= previous) throw Error(ErrorKind::InvalidInput, "schedule must be strictly increasing and positive");
    previous = n;
  }
  std::vector<TrendPoint> trend;
  if (schedule.empty()) return trend;
  t.interval_of(x0);

  const auto expected = interval_shares(t);
  const auto translations = t.translations();
  std::vector<std::uint64_t> counts(t.size(), 0);
  Scalar x = canonical(x0);
  std::uint64_t done = 0;
  for (const auto checkpoint : schedule) {
    for (; done < checkpoint; ++done) {
      const int j = t.interval_of(x);
      ++counts[j - 1];
      x += translations[j - 1];
    }
    trend.push_back({checkpoint, cell_discrepancy(counts, checkpoint, expected)});
  }
  return trend;
}

}  // namespace iet
