#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "iet/permutation.hpp"
#include "iet/scalar.hpp"

namespace iet {

/// Half-open interval [left, right).
struct Interval {
  Scalar left;
  Scalar right;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct ImagePiece {
  Interval image;  // T(I_source)
  int source;      // 1-based index of the exchanged interval
};

/// Interval exchange on [0, |a|) built from (sigma, a). The interval I_j is
/// [x_{j-1}, x_j) and T translates it by (a Omega)_j = x'_{sigma(j)} - x_j.
/// Exact rational arithmetic everywhere; a point on a discontinuity belongs to
/// the interval on its right.
class IntervalExchange {
 public:
  /// Throws DimensionMismatch if lengths.size() != sigma.size() and
  /// NonPositiveLength if some a_i <= 0.
  IntervalExchange(Permutation sigma, std::vector<Scalar> lengths);

  const Permutation& permutation() const noexcept { return sigma_; }
  int size() const noexcept { return sigma_.size(); }
  std::span<const Scalar> lengths() const noexcept { return lengths_; }
  /// x_1..x_d (partial sums of a).
  std::span<const Scalar> top_discontinuities() const noexcept { return top_; }
  /// x'_1..x'_d (partial sums of a in bottom order).
  std::span<const Scalar> bottom_discontinuities() const noexcept { return bottom_; }
  std::span<const Scalar> translations() const noexcept { return translations_; }
  const Scalar& total_length() const noexcept { return top_.back(); }

  /// 1-based j with x in I_j. Throws OutOfDomain outside [0, |I|).
  int interval_of(const Scalar& x) const;

  Scalar apply(const Scalar& x) const;
  Scalar apply_inverse(const Scalar& y) const;

  /// Images T(I_j) sorted by left endpoint; they tile [0, |I|).
  std::vector<ImagePiece> image_partition() const;

  /// Interval indices of x0, T(x0), ..., T^{n-1}(x0).
  std::vector<int> orbit_coding(const Scalar& x0, std::size_t n) const;

 private:
  int locate(std::span<const Scalar> edges, const Scalar& x) const;

  Permutation sigma_;
  std::vector<Scalar> lengths_;
  std::vector<Scalar> top_;
  std::vector<Scalar> bottom_;
  std::vector<Scalar> translations_;
};

/// T^m(x_i) = x_j with both discontinuities interior (1 <= i, j <= d-1).
struct Connection {
  int m;
  int source;
  int target;
  friend auto operator<=>(const Connection&, const Connection&) = default;
};

/// Every connection with 1 <= m <= max_m, sorted by (m, source, target).
/// Throws InvalidBound when max_m < 1.
std::vector<Connection> find_connections(const IntervalExchange& t, int max_m);

}  // namespace iet
