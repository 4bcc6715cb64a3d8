#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace iet {

/// A bijection of {1..d}. Symbols and positions are 1-based throughout the
/// public interface; `sigma(i)` is the position of symbol i in the bottom
/// order and `sigma.inverse(j)` the symbol found at bottom position j.
class Permutation {
 public:
  /// Validates a one-line image sequence (sigma(1), ..., sigma(d)).
  /// Throws NotABijection on duplicates, out-of-range values or d = 0.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }
  static Permutation identity(int d);
  /// The reversal (d, d-1, ..., 1).
  static Permutation reversal(int d);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int symbol) const { return image_[symbol - 1]; }
  int inverse(int position) const { return preimage_[position - 1]; }
  std::span<const int> images() const noexcept { return image_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images);

  std::vector<int> image_;
  std::vector<int> preimage_;
};

/// A subset of symbols, kept sorted and duplicate free.
class SymbolSet {
 public:
  SymbolSet() = default;
  SymbolSet(std::initializer_list<int> members);
  explicit SymbolSet(std::vector<int> members);

  bool contains(int symbol) const;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const int> members() const noexcept { return members_; }

  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;

 private:
  std::vector<int> members_;
};

/// Antisymmetric d x d matrix with entries in {-1, 0, +1}:
///   +1  if i > j and sigma(i) < sigma(j),
///   -1  if i < j and sigma(i) > sigma(j),
///    0  otherwise.
class OmegaMatrix {
 public:
  explicit OmegaMatrix(const Permutation& sigma);

  int size() const noexcept { return d_; }
  int operator()(int i, int j) const { return entries_[(i - 1) * d_ + (j - 1)]; }
  std::vector<std::vector<int>> rows() const;

 private:
  int d_;
  std::vector<std::int8_t> entries_;
};

inline OmegaMatrix omega(const Permutation& sigma) { return OmegaMatrix(sigma); }

/// True iff no proper prefix {1..k}, k < d, is mapped onto itself.
bool is_irreducible(const Permutation& sigma);

/// Deletes the symbols in `removed` from both the top order (1..d) and the
/// bottom order, relabelling what is left order-preservingly. Reducible inputs
/// are fine. Throws EmptyResult if every symbol is removed and InvalidInput
/// if `removed` names a symbol outside {1..d}.
Permutation restrict(const Permutation& sigma, const SymbolSet& removed);

struct Component {
  Permutation block;   // relabelled to {1..|support|}
  SymbolSet support;   // original symbols of the block
};

/// Splits sigma into consecutive irreducible blocks by cutting after every
/// invariant prefix, and returns the block containing `symbol`.
Component irreducible_component_containing(const Permutation& sigma, int symbol);

/// Uniform over irreducible permutations of d symbols (rejection sampling on a
/// seeded mt19937_64). The sampler is written out so that a (d, seed) pair
/// gives the same permutation on every standard library. Throws InvalidSize for d < 2.
Permutation random_irreducible(int d, std::uint64_t seed);

}  // namespace iet
