#include "iet/exchange.hpp"

#include <algorithm>

#include "iet/error.hpp"

namespace iet {

namespace {

// Below this many intervals a linear scan beats binary search on GMP compares.
constexpr int kLinearScanLimit = 16;

}  // namespace

IntervalExchange::IntervalExchange(Permutation sigma, std::vector<Scalar> lengths)
    : sigma_(std::move(sigma)), lengths_(canonical(std::move(lengths))) {
  const int d = sigma_.size();
  if (static_cast<int>(lengths_.size()) != d) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(d) + " lengths, got " + std::to_string(lengths_.size()));
  }
  for (int i = 0; i < d; ++i) {
    if (sgn(lengths_[i]) <= 0) {
      throw Error(ErrorKind::NonPositiveLength,
                  "length a_" + std::to_string(i + 1) + " = " + to_string(lengths_[i]) + " is not positive");
    }
  }

  top_.resize(d);
  bottom_.resize(d);
  Scalar running = 0;
  for (int i = 1; i <= d; ++i) top_[i - 1] = (running += lengths_[i - 1]);
  running = 0;
  for (int j = 1; j <= d; ++j) bottom_[j - 1] = (running += lengths_[sigma_.inverse(j) - 1]);

  // (a Omega)_j, checked against x'_{sigma(j)} - x_j.
  const OmegaMatrix om(sigma_);
  translations_.resize(d);
  for (int j = 1; j <= d; ++j) {
    Scalar t = 0;
    for (int i = 1; i <= d; ++i) {
      if (const int w = om(i, j); w != 0) t += w * lengths_[i - 1];
    }
    if (t != bottom_[sigma_(j) - 1] - top_[j - 1]) {
      throw Error(ErrorKind::InvalidInput, "translation formulas disagree at j=" + std::to_string(j));
    }
    translations_[j - 1] = std::move(t);
  }
}

int IntervalExchange::locate(std::span<const Scalar> edges, const Scalar& x) const {
  if (sgn(x) < 0 || x >= edges.back()) {
    throw Error(ErrorKind::OutOfDomain, "point " + to_string(x) + " outside [0, " + to_string(edges.back()) + ")");
  }
  if (edges.size() <= static_cast<std::size_t>(kLinearScanLimit)) {
    int j = 0;
    while (x >= edges[j]) ++j;
    return j + 1;
  }
  return static_cast<int>(std::upper_bound(edges.begin(), edges.end(), x) - edges.begin()) + 1;
}

int IntervalExchange::interval_of(const Scalar& x) const { return locate(top_, canonical(x)); }

Scalar IntervalExchange::apply(const Scalar& raw) const {
  const Scalar x = canonical(raw);
  return x + translations_[locate(top_, x) - 1];
}

Scalar IntervalExchange::apply_inverse(const Scalar& raw) const {
  const Scalar y = canonical(raw);
  const int position = locate(bottom_, y);
  return y - translations_[sigma_.inverse(position) - 1];
}

std::vector<ImagePiece> IntervalExchange::image_partition() const {
  std::vector<ImagePiece> pieces;
  pieces.reserve(lengths_.size());
  for (int j = 1; j <= size(); ++j) {
    const int k = sigma_(j);
    Scalar left = k == 1 ? Scalar(0) : bottom_[k - 2];
    pieces.push_back({{std::move(left), bottom_[k - 1]}, j});
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const ImagePiece& a, const ImagePiece& b) { return a.image.left < b.image.left; });
  return pieces;
}

std::vector<int> IntervalExchange::orbit_coding(const Scalar& x0, std::size_t n) const {
  std::vector<int> codes;
  if (n == 0) {
    interval_of(x0);
    return codes;
  }
  codes.reserve(n);
  Scalar x = canonical(x0);
  for (std::size_t step = 0; step < n; ++step) {
    const int j = locate(top_, x);
    codes.push_back(j);
    x += translations_[j - 1];
  }
  return codes;
}

std::vector<Connection> find_connections(const IntervalExchange& t, int max_m) {
  if (max_m < 1) throw Error(ErrorKind::InvalidBound, "max_m must be at least 1");
  const auto disc = t.top_discontinuities();
  const auto interior = disc.first(disc.size() - 1);

  std::vector<Connection> found;
  for (std::size_t i = 0; i < interior.size(); ++i) {
    Scalar x = interior[i];
    for (int m = 1; m <= max_m; ++m) {
      x = t.apply(x);
      const auto hit = std::lower_bound(interior.begin(), interior.end(), x);
      if (hit != interior.end() && *hit == x) {
        found.push_back({m, static_cast<int>(i) + 1, static_cast<int>(hit - interior.begin()) + 1});
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace iet
