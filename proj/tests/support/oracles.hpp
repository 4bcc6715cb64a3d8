#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library code it checks: each oracle works straight from the
// defining formulas on plain vectors.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "iet/scalar.hpp"

namespace iet::oracle {

/// Entry-by-entry evaluation of the piecewise definition on 1-based images.
inline std::vector<std::vector<int>> omega(const std::vector<int>& sigma) {
  const int d = static_cast<int>(sigma.size());
  std::vector<std::vector<int>> m(d, std::vector<int>(d, 0));
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (i > j && sigma[i - 1] < sigma[j - 1]) m[i - 1][j - 1] = 1;
      else if (i < j && sigma[i - 1] > sigma[j - 1]) m[i - 1][j - 1] = -1;
    }
  }
  return m;
}

inline bool irreducible(const std::vector<int>& sigma) {
  const int d = static_cast<int>(sigma.size());
  for (int k = 1; k < d; ++k) {
    std::set<int> image(sigma.begin(), sigma.begin() + k);
    if (*image.rbegin() == k && static_cast<int>(image.size()) == k) return false;
  }
  return true;
}

inline std::vector<int> inverse(const std::vector<int>& sigma) {
  std::vector<int> inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

/// Delete K from the top word 1..d and the bottom word sigma^-1(1..d), then
/// read off where each surviving top letter sits in the surviving bottom word.
inline std::vector<int> restrict(const std::vector<int>& sigma, const std::set<int>& removed) {
  const int d = static_cast<int>(sigma.size());
  std::vector<int> top, bottom;
  for (int s = 1; s <= d; ++s)
    if (!removed.count(s)) top.push_back(s);
  for (int s : inverse(sigma))
    if (!removed.count(s)) bottom.push_back(s);
  std::vector<int> out;
  for (int s : top) out.push_back(static_cast<int>(std::find(bottom.begin(), bottom.end(), s) - bottom.begin()) + 1);
  return out;
}

/// Exchange given by T(x) = x - x_j + x'_{sigma(j)} on [x_{j-1}, x_j).
struct Exchange {
  std::vector<int> sigma;
  std::vector<Scalar> x;       // x_0..x_d
  std::vector<Scalar> xprime;  // x'_0..x'_d

  Exchange(std::vector<int> s, const std::vector<Scalar>& a) : sigma(std::move(s)) {
    const auto inv = inverse(sigma);
    x.assign(1, Scalar(0));
    xprime.assign(1, Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i) x.push_back(x.back() + a[i]);
    for (std::size_t j = 0; j < a.size(); ++j) xprime.push_back(xprime.back() + a[inv[j] - 1]);
  }

  std::size_t d() const { return sigma.size(); }

  Scalar apply(const Scalar& p) const {
    for (std::size_t j = 1; j <= d(); ++j) {
      if (x[j - 1] <= p && p < x[j]) return p - x[j] + xprime[sigma[j - 1]];
    }
    throw std::out_of_range("oracle: point outside the interval");
  }

  int code(const Scalar& p) const {
    for (std::size_t j = 1; j <= d(); ++j)
      if (x[j - 1] <= p && p < x[j]) return static_cast<int>(j);
    throw std::out_of_range("oracle: point outside the interval");
  }
};

struct Triple {
  int m, i, j;
  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Every (m, i, j) with T^m(x_i) = x_j, interior i and j, found by walking
/// each orbit and comparing against every interior discontinuity.
inline std::vector<Triple> connections(const Exchange& t, int max_m) {
  std::vector<Triple> out;
  const int d = static_cast<int>(t.d());
  for (int i = 1; i < d; ++i) {
    Scalar p = t.x[i];
    for (int m = 1; m <= max_m; ++m) {
      p = t.apply(p);
      for (int j = 1; j < d; ++j)
        if (p == t.x[j]) out.push_back({m, i, j});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct P {
  Scalar x, y;
  friend bool operator==(const P&, const P&) = default;
};

/// Intersection of closed segments [a,b] and [c,d] by solving
/// a + t(b-a) = c + u(d-c). Returns the set of shared points as either one
/// point or a pair of distinct points spanning an overlap.
inline std::vector<P> intersect(const P& a, const P& b, const P& c, const P& d) {
  const Scalar rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
  const Scalar wx = c.x - a.x, wy = c.y - a.y;
  const Scalar den = rx * sy - ry * sx;
  if (den != 0) {
    const Scalar t = (wx * sy - wy * sx) / den;
    const Scalar u = (wx * ry - wy * rx) / den;
    if (t < 0 || t > 1 || u < 0 || u > 1) return {};
    return {P{a.x + t * rx, a.y + t * ry}};
  }
  if (wx * ry - wy * rx != 0) return {};  // parallel, different lines
  // Same line: parametrize c and d along a + t r.
  const Scalar rr = rx * rx + ry * ry;
  const Scalar tc = (wx * rx + wy * ry) / rr;
  const Scalar td = ((d.x - a.x) * rx + (d.y - a.y) * ry) / rr;
  const Scalar lo = std::max(Scalar(0), std::min(tc, td));
  const Scalar hi = std::min(Scalar(1), std::max(tc, td));
  if (lo > hi) return {};
  const P plo{a.x + lo * rx, a.y + lo * ry};
  if (lo == hi) return {plo};
  return {plo, P{a.x + hi * rx, a.y + hi * ry}};
}

/// Simplicity of the closed polygon C^t_0..C^t_d, C^b_{d-1}..C^b_1: two edges
/// may meet only if they are cyclically adjacent, and then only at the vertex
/// they share.
inline bool simple_polygon(const std::vector<P>& top, const std::vector<P>& bottom) {
  std::vector<P> loop(top.begin(), top.end());
  for (std::size_t k = bottom.size() - 1; k-- > 1;) loop.push_back(bottom[k]);
  const std::size_t n = loop.size();
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = e + 1; f < n; ++f) {
      const auto shared = intersect(loop[e], loop[(e + 1) % n], loop[f], loop[(f + 1) % n]);
      if (shared.empty()) continue;
      std::optional<P> common;
      if (f == e + 1) common = loop[f];
      if (e == 0 && f == n - 1) common = loop[0];
      if (!common || shared.size() != 1 || !(shared[0] == *common)) return false;
    }
  }
  return true;
}

/// Chain vertices from scratch: top adds zeta_1..zeta_d, bottom adds zeta in
/// sigma^-1 order.
inline std::pair<std::vector<P>, std::vector<P>> chains(const std::vector<int>& sigma, const std::vector<Scalar>& a,
                                                        const std::vector<Scalar>& b) {
  std::vector<P> top{{0, 0}}, bottom{{0, 0}};
  for (std::size_t i = 0; i < a.size(); ++i) top.push_back({top.back().x + a[i], top.back().y + b[i]});
  for (int k : inverse(sigma)) bottom.push_back({bottom.back().x + a[k - 1], bottom.back().y + b[k - 1]});
  return {top, bottom};
}

/// L_i = sum_{j<i, sigma(j)>sigma(i)} b_j - sum_{j>i, sigma(j)<sigma(i)} b_j.
inline std::vector<Scalar> return_times(const std::vector<int>& sigma, const std::vector<Scalar>& b) {
  const std::size_t d = sigma.size();
  std::vector<Scalar> l(d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (j < i && sigma[j] > sigma[i]) l[i] += b[j];
      if (j > i && sigma[j] < sigma[i]) l[i] -= b[j];
    }
  }
  return l;
}

}  // namespace iet::oracle
