#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "iet/geometry.hpp"
#include "iet/permutation.hpp"
#include "iet/scalar.hpp"

namespace iet {

/// Masur suspension data for (sigma, a, b): edge vectors zeta_i = (a_i, b_i),
/// the top chain concatenating zeta_1..zeta_d and the bottom chain
/// concatenating zeta_{sigma^-1(1)}..zeta_{sigma^-1(d)}. Both chains run from
/// (0,0) to sum(zeta) and are x-monotone because every a_i > 0.
class SuspensionDiagram {
 public:
  /// Throws DimensionMismatch or NonPositiveLength.
  SuspensionDiagram(Permutation sigma, std::vector<Scalar> lengths, std::vector<Scalar> heights);

  const Permutation& permutation() const noexcept { return sigma_; }
  int size() const noexcept { return sigma_.size(); }
  std::span<const Scalar> lengths() const noexcept { return lengths_; }
  std::span<const Scalar> heights() const noexcept { return heights_; }
  std::span<const Point> zeta() const noexcept { return zeta_; }
  /// kappa_i = b_i / a_i.
  std::span<const Scalar> slopes() const noexcept { return slopes_; }
  /// C^t_0..C^t_d and C^b_0..C^b_d.
  std::span<const Point> top_chain() const noexcept { return top_; }
  std::span<const Point> bottom_chain() const noexcept { return bottom_; }
  /// L_i = (Omega b^T)_i.
  std::span<const Scalar> return_profile() const noexcept { return return_profile_; }

  // Both candidate readings of which chain starts higher. They are stored
  // side by side; nothing downstream picks one.
  /// kappa_1 > kappa_{sigma^-1(1)}: zeta_1 leaves the origin above the first bottom edge.
  bool first_edges_top_above() const;
  /// kappa_1 > kappa_{sigma^-1(d)}.
  bool first_top_steeper_than_last_bottom() const;

 private:
  Permutation sigma_;
  std::vector<Scalar> lengths_;
  std::vector<Scalar> heights_;
  std::vector<Point> zeta_;
  std::vector<Scalar> slopes_;
  std::vector<Point> top_;
  std::vector<Point> bottom_;
  std::vector<Scalar> return_profile_;
};

/// L_i = (Omega b^T)_i, cross-checked against y_i - y'_{sigma(i)}.
/// Throws DimensionMismatch.
std::vector<Scalar> return_time_profile(const Permutation& sigma, std::span<const Scalar> heights);

enum class Chain { Top, Bottom };
std::string_view to_string(Chain c);

/// Segments are numbered 1..d along their chain; segment k joins C_{k-1} to C_k.
struct IntersectionWitness {
  Chain first_chain;
  int first_segment;
  Chain second_chain;
  int second_segment;
  SegmentRelation relation;
};

struct IntersectionReport {
  bool simple = true;
  std::optional<IntersectionWitness> witness;
};

/// Decides whether the closed curve top_chain + bottom_chain is simple.
/// Allowed contacts: consecutive segments of one chain meeting at their shared
/// vertex, and the two chains meeting at C_0 (first segments) and C_d (last
/// segments). Any other touch, crossing or overlap is reported; pairs are
/// examined top/top, then bottom/bottom, then top/bottom, each in
/// lexicographic segment order, and the first offender is the witness.
IntersectionReport self_intersects(const SuspensionDiagram& diagram);

enum class SignClass { AllPositive, AllNegative, Mixed, HasZero };
std::string_view to_string(SignClass c);

/// HasZero wins over Mixed when some entry is exactly zero.
SignClass sign_class(std::span<const Scalar> values);

/// Sign class of the return-time profile. AllPositive means L > 0 pointwise,
/// which is enough for a positive pair.
inline SignClass pointwise_positive(const SuspensionDiagram& diagram) {
  return sign_class(diagram.return_profile());
}

/// sum_i a_i L_i, the integral of L against Lebesgue measure.
Scalar lebesgue_mean_return_time(const SuspensionDiagram& diagram);

}  // namespace iet
