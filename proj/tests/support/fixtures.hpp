#pragma once

#include <vector>

#include "iet/permutation.hpp"
#include "iet/scalar.hpp"

namespace iet::testing {

struct DiagramFixture {
  std::vector<int> images;
  std::vector<Scalar> lengths;
  std::vector<Scalar> heights;
  Permutation sigma() const { return Permutation::from_images(images); }
};

/// Non-monotone slopes with two proper crossings (top 2 x bottom 3 at
/// (29/5, 11/5), top 4 x bottom 4). Found by a seeded random search over
/// irreducible sigma with d in 4..6 and small integer data, confirmed with the
/// parametric all-pairs oracle, then frozen here.
inline const DiagramFixture& crossing_fixture() {
  static const DiagramFixture fx{{3, 4, 1, 5, 2}, {4, 3, 2, 3, 3}, {1, 2, 2, -4, 0}};
  return fx;
}

}  // namespace iet::testing
