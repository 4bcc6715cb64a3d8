#include "iet/permutation.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "iet/error.hpp"

namespace iet {

Permutation::Permutation(std::vector<int> images)
    : image_(std::move(images)), preimage_(image_.size()) {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    preimage_[image_[i] - 1] = static_cast<int>(i) + 1;
  }
}

Permutation Permutation::from_images(std::span<const int> images) {
  const auto d = images.size();
  if (d == 0) throw Error(ErrorKind::NotABijection, "permutation must have at least one symbol");
  std::vector<bool> seen(d, false);
  for (int v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > d) {
      throw Error(ErrorKind::NotABijection,
                  "value " + std::to_string(v) + " outside 1.." + std::to_string(d));
    }
    if (seen[v - 1]) {
      throw Error(ErrorKind::NotABijection, "value " + std::to_string(v) + " repeated");
    }
    seen[v - 1] = true;
  }
  return Permutation(std::vector<int>(images.begin(), images.end()));
}

Permutation Permutation::identity(int d) {
  if (d < 1) throw Error(ErrorKind::InvalidSize, "permutation size must be positive");
  std::vector<int> images(d);
  for (int i = 0; i < d; ++i) images[i] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::reversal(int d) {
  if (d < 1) throw Error(ErrorKind::InvalidSize, "permutation size must be positive");
  std::vector<int> images(d);
  for (int i = 0; i < d; ++i) images[i] = d - i;
  return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[i]);
  }
  return out;
}

SymbolSet::SymbolSet(std::initializer_list<int> members)
    : SymbolSet(std::vector<int>(members)) {}

SymbolSet::SymbolSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SymbolSet::contains(int symbol) const {
  return std::binary_search(members_.begin(), members_.end(), symbol);
}

OmegaMatrix::OmegaMatrix(const Permutation& sigma)
    : d_(sigma.size()), entries_(static_cast<std::size_t>(d_) * d_, 0) {
  for (int i = 1; i <= d_; ++i) {
    for (int j = i + 1; j <= d_; ++j) {
      if (sigma(i) > sigma(j)) {
        entries_[(i - 1) * d_ + (j - 1)] = -1;
        entries_[(j - 1) * d_ + (i - 1)] = 1;
      }
    }
  }
}

std::vector<std::vector<int>> OmegaMatrix::rows() const {
  std::vector<std::vector<int>> out(d_, std::vector<int>(d_));
  for (int i = 1; i <= d_; ++i)
    for (int j = 1; j <= d_; ++j) out[i - 1][j - 1] = (*this)(i, j);
  return out;
}

bool is_irreducible(const Permutation& sigma) {
  // {1..k} is invariant exactly when the largest image among 1..k equals k.
  int largest = 0;
  for (int k = 1; k < sigma.size(); ++k) {
    largest = std::max(largest, sigma(k));
    if (largest == k) return false;
  }
  return true;
}

Permutation restrict(const Permutation& sigma, const SymbolSet& removed) {
  const int d = sigma.size();
  for (int k : removed.members()) {
    if (k < 1 || k > d) {
      throw Error(ErrorKind::InvalidInput, "symbol " + std::to_string(k) + " outside 1.." + std::to_string(d));
    }
  }
  if (static_cast<int>(removed.size()) == d) {
    throw Error(ErrorKind::EmptyResult, "removing every symbol leaves no permutation");
  }

  // Rank of each surviving bottom position among the surviving positions.
  std::vector<int> bottom_rank(d + 1, 0);
  int rank = 0;
  for (int j = 1; j <= d; ++j) {
    if (!removed.contains(sigma.inverse(j))) bottom_rank[j] = ++rank;
  }
  std::vector<int> images;
  images.reserve(d - removed.size());
  for (int i = 1; i <= d; ++i) {
    if (!removed.contains(i)) images.push_back(bottom_rank[sigma(i)]);
  }
  return Permutation::from_images(images);
}

Component irreducible_component_containing(const Permutation& sigma, int symbol) {
  const int d = sigma.size();
  if (symbol < 1 || symbol > d) {
    throw Error(ErrorKind::InvalidInput, "symbol " + std::to_string(symbol) + " outside 1.." + std::to_string(d));
  }
  int start = 1;
  int largest = 0;
  for (int k = 1; k <= d; ++k) {
    largest = std::max(largest, sigma(k));
    if (largest != k) continue;
    // {start..k} is a block: it is mapped onto itself.
    if (symbol <= k) {
      std::vector<int> images;
      std::vector<int> support;
      for (int i = start; i <= k; ++i) {
        images.push_back(sigma(i) - start + 1);
        support.push_back(i);
      }
      return {Permutation::from_images(images), SymbolSet(std::move(support))};
    }
    start = k + 1;
  }
  throw Error(ErrorKind::InvalidInput, "unreachable: symbol not covered by any block");
}

namespace {

// Unbiased draw from [0, bound) by rejection on the raw 64-bit stream.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = gen();
  } while (r >= limit);
  return r % bound;
}

}  // namespace

Permutation random_irreducible(int d, std::uint64_t seed) {
  if (d < 2) {
    throw Error(ErrorKind::InvalidSize, "irreducible exchanges need at least two symbols");
  }
  std::mt19937_64 gen(seed);
  std::vector<int> images(d);
  while (true) {
    for (int i = 0; i < d; ++i) images[i] = i + 1;
    for (int i = d - 1; i > 0; --i) {
      const auto j = static_cast<int>(bounded(gen, static_cast<std::uint64_t>(i) + 1));
      std::swap(images[i], images[j]);
    }
    auto candidate = Permutation::from_images(images);
    if (is_irreducible(candidate)) return candidate;
  }
}

}  // namespace iet
