#include "iet/suspension.hpp"

#include "iet/error.hpp"

namespace iet {

std::vector<Scalar> return_time_profile(const Permutation& sigma, std::span<const Scalar> raw_heights) {
  const auto heights = canonical({raw_heights.begin(), raw_heights.end()});
  const int d = sigma.size();
  if (static_cast<int>(heights.size()) != d) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(d) + " heights, got " + std::to_string(heights.size()));
  }
  std::vector<Scalar> y(d), y_bottom(d);
  Scalar running = 0;
  for (int i = 1; i <= d; ++i) y[i - 1] = (running += heights[i - 1]);
  running = 0;
  for (int j = 1; j <= d; ++j) y_bottom[j - 1] = (running += heights[sigma.inverse(j) - 1]);

  const OmegaMatrix om(sigma);
  std::vector<Scalar> profile(d);
  for (int i = 1; i <= d; ++i) {
    Scalar l = 0;
    for (int j = 1; j <= d; ++j) {
      if (const int w = om(i, j); w != 0) l += w * heights[j - 1];
    }
    if (l != y[i - 1] - y_bottom[sigma(i) - 1]) {
      throw Error(ErrorKind::InvalidInput, "return-time formulas disagree at i=" + std::to_string(i));
    }
    profile[i - 1] = std::move(l);
  }
  return profile;
}

SuspensionDiagram::SuspensionDiagram(Permutation sigma, std::vector<Scalar> lengths,
                                     std::vector<Scalar> heights)
    : sigma_(std::move(sigma)), lengths_(canonical(std::move(lengths))), heights_(canonical(std::move(heights))) {
  const int d = sigma_.size();
  if (static_cast<int>(lengths_.size()) != d || static_cast<int>(heights_.size()) != d) {
    throw Error(ErrorKind::DimensionMismatch,
                "permutation has " + std::to_string(d) + " symbols but got " + std::to_string(lengths_.size()) +
                    " lengths and " + std::to_string(heights_.size()) + " heights");
  }
  for (int i = 0; i < d; ++i) {
    if (sgn(lengths_[i]) <= 0) {
      throw Error(ErrorKind::NonPositiveLength,
                  "length a_" + std::to_string(i + 1) + " = " + to_string(lengths_[i]) + " is not positive");
    }
  }

  zeta_.reserve(d);
  slopes_.reserve(d);
  for (int i = 0; i < d; ++i) {
    zeta_.push_back({lengths_[i], heights_[i]});
    slopes_.push_back(heights_[i] / lengths_[i]);
  }

  top_.reserve(d + 1);
  bottom_.reserve(d + 1);
  top_.push_back({0, 0});
  bottom_.push_back({0, 0});
  for (int i = 1; i <= d; ++i) top_.push_back(top_.back() + zeta_[i - 1]);
  for (int j = 1; j <= d; ++j) bottom_.push_back(bottom_.back() + zeta_[sigma_.inverse(j) - 1]);

  return_profile_ = return_time_profile(sigma_, heights_);
}

bool SuspensionDiagram::first_edges_top_above() const {
  return slopes_.front() > slopes_[sigma_.inverse(1) - 1];
}

bool SuspensionDiagram::first_top_steeper_than_last_bottom() const {
  return slopes_.front() > slopes_[sigma_.inverse(size()) - 1];
}

std::string_view to_string(Chain c) { return c == Chain::Top ? "top" : "bottom"; }

std::string_view to_string(SignClass c) {
  switch (c) {
    case SignClass::AllPositive: return "AllPositive";
    case SignClass::AllNegative: return "AllNegative";
    case SignClass::Mixed: return "Mixed";
    case SignClass::HasZero: return "HasZero";
  }
  return "Unknown";
}

namespace {

bool allowed_contact(Chain a, int i, Chain b, int j, int d, const SegmentRelation& rel,
                     const Point& origin, const Point& end) {
  if (rel.kind != SegmentClass::EndpointTouch) return false;
  if (a == b) {
    // Consecutive segments k, k+1 share C_k and nothing else is tolerated.
    return j == i + 1;
  }
  if (i == 1 && j == 1 && *rel.point == origin) return true;
  if (i == d && j == d && *rel.point == end) return true;
  return false;
}

}  // namespace

IntersectionReport self_intersects(const SuspensionDiagram& diagram) {
  const int d = diagram.size();
  const auto top = diagram.top_chain();
  const auto bottom = diagram.bottom_chain();
  const Point& origin = top.front();
  const Point& end = top.back();

  auto check = [&](Chain a, std::span<const Point> ca, int i, Chain b, std::span<const Point> cb,
                   int j) -> std::optional<IntersectionWitness> {
    auto rel = segment_relation(ca[i - 1], ca[i], cb[j - 1], cb[j]);
    if (rel.kind == SegmentClass::Disjoint) return std::nullopt;
    if (allowed_contact(a, i, b, j, d, rel, origin, end)) return std::nullopt;
    return IntersectionWitness{a, i, b, j, std::move(rel)};
  };

  for (auto [chain, points] : {std::pair{Chain::Top, top}, std::pair{Chain::Bottom, bottom}}) {
    for (int i = 1; i <= d; ++i) {
      for (int j = i + 1; j <= d; ++j) {
        if (auto w = check(chain, points, i, chain, points, j)) return {false, std::move(w)};
      }
    }
  }
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (auto w = check(Chain::Top, top, i, Chain::Bottom, bottom, j)) return {false, std::move(w)};
    }
  }
  return {};
}

SignClass sign_class(std::span<const Scalar> values) {
  bool positive = false, negative = false;
  for (const auto& v : values) {
    const int s = sgn(canonical(v));
    if (s == 0) return SignClass::HasZero;
    (s > 0 ? positive : negative) = true;
  }
  if (positive && negative) return SignClass::Mixed;
  return negative ? SignClass::AllNegative : SignClass::AllPositive;
}

Scalar lebesgue_mean_return_time(const SuspensionDiagram& diagram) {
  Scalar total = 0;
  for (int i = 0; i < diagram.size(); ++i) total += diagram.lengths()[i] * diagram.return_profile()[i];
  return total;
}

}  // namespace iet
