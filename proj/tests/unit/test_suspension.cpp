#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "iet/error.hpp"
#include "iet/suspension.hpp"
#include "oracles.hpp"

using iet::Permutation;
using iet::Point;
using iet::Scalar;
using iet::SignClass;
using iet::SuspensionDiagram;

namespace {

std::vector<Point> pts(std::span<const Point> s) { return {s.begin(), s.end()}; }
std::vector<Scalar> vec(std::span<const Scalar> s) { return {s.begin(), s.end()}; }

bool oracle_simple(const SuspensionDiagram& d) {
  std::vector<iet::oracle::P> top, bottom;
  for (const auto& p : d.top_chain()) top.push_back({p.x, p.y});
  for (const auto& p : d.bottom_chain()) bottom.push_back({p.x, p.y});
  return iet::oracle::simple_polygon(top, bottom);
}

}  // namespace

TEST_CASE("build_suspension: parallelogram") {
  const SuspensionDiagram d(Permutation::from_images({2, 1}), {1, 1}, {1, -1});
  CHECK(pts(d.top_chain()) == std::vector<Point>{{0, 0}, {1, 1}, {2, 0}});
  CHECK(pts(d.bottom_chain()) == std::vector<Point>{{0, 0}, {1, -1}, {2, 0}});
  CHECK(vec(d.return_profile()) == std::vector<Scalar>{1, 1});
  CHECK(vec(d.slopes()) == std::vector<Scalar>{1, -1});
  CHECK(d.first_edges_top_above());
}

TEST_CASE("build_suspension: hexagon") {
  const SuspensionDiagram d(Permutation::from_images({3, 2, 1}), {1, 1, 1}, {1, 0, -1});
  CHECK(pts(d.top_chain()) == std::vector<Point>{{0, 0}, {1, 1}, {2, 1}, {3, 0}});
  CHECK(pts(d.bottom_chain()) == std::vector<Point>{{0, 0}, {1, -1}, {2, -1}, {3, 0}});
  CHECK(vec(d.return_profile()) == std::vector<Scalar>{1, 2, 1});
}

TEST_CASE("build_suspension: zero heights and errors") {
  const SuspensionDiagram d(Permutation::from_images({3, 1, 2}), {1, 2, 3}, {0, 0, 0});
  CHECK(vec(d.return_profile()) == std::vector<Scalar>{0, 0, 0});
  for (const auto& p : d.top_chain()) CHECK(p.y == 0);
  for (const auto& p : d.bottom_chain()) CHECK(p.y == 0);
  CHECK(iet::pointwise_positive(d) == SignClass::HasZero);
  CHECK_FALSE(iet::self_intersects(d).simple);

  CHECK_THROWS_AS(SuspensionDiagram(Permutation::from_images({2, 1}), {1, 0}, {1, 1}), iet::Error);
  CHECK_THROWS_AS(SuspensionDiagram(Permutation::from_images({2, 1}), {1, 1}, {1}), iet::Error);
}

TEST_CASE("return_time_profile examples") {
  CHECK(iet::return_time_profile(Permutation::from_images({2, 1}), std::vector<Scalar>{1, -1}) ==
        std::vector<Scalar>{1, 1});
  CHECK(iet::return_time_profile(Permutation::from_images({3, 2, 1}), std::vector<Scalar>{1, 0, -1}) ==
        std::vector<Scalar>{1, 2, 1});
  CHECK(iet::return_time_profile(Permutation::from_images({2, 4, 1, 3}), std::vector<Scalar>(4, Scalar(0))) ==
        std::vector<Scalar>(4, Scalar(0)));
  CHECK_THROWS_AS(iet::return_time_profile(Permutation::from_images({2, 1}), std::vector<Scalar>{1}), iet::Error);
}

TEST_CASE("chains close up and the return profile matches the oracle") {
  iet::testing::Rng rng(iet::testing::seed_or(41));
  for (int trial = 0; trial < 300; ++trial) {
    const int d = static_cast<int>(rng.integer(1, 9));
    const auto sigma = rng.any_permutation(d);
    const auto a = rng.lengths(d);
    const auto b = rng.heights(d);
    const SuspensionDiagram diagram(sigma, a, b);
    CHECK(diagram.top_chain().back() == diagram.bottom_chain().back());
    CHECK(diagram.top_chain().front() == Point{0, 0});
    const std::vector<int> s(sigma.images().begin(), sigma.images().end());
    CHECK(vec(diagram.return_profile()) == iet::oracle::return_times(s, b));
    const auto [top, bottom] = iet::oracle::chains(s, a, b);
    for (int k = 0; k <= d; ++k) {
      CHECK(diagram.top_chain()[k] == Point{top[k].x, top[k].y});
      CHECK(diagram.bottom_chain()[k] == Point{bottom[k].x, bottom[k].y});
    }
  }
}

TEST_CASE("self_intersects: convex fixtures are simple") {
  CHECK(iet::self_intersects(SuspensionDiagram(Permutation::from_images({2, 1}), {1, 1}, {1, -1})).simple);
  CHECK(iet::self_intersects(SuspensionDiagram(Permutation::from_images({3, 2, 1}), {1, 1, 1}, {1, 0, -1})).simple);
}

TEST_CASE("self_intersects: frozen crossing fixture") {
  const auto& fx = iet::testing::crossing_fixture();
  const SuspensionDiagram d(fx.sigma(), fx.lengths, fx.heights);
  CHECK_FALSE(oracle_simple(d));
  const auto report = iet::self_intersects(d);
  REQUIRE_FALSE(report.simple);
  REQUIRE(report.witness);
  const auto& w = *report.witness;
  CHECK(w.first_chain == iet::Chain::Top);
  CHECK(w.first_segment == 2);
  CHECK(w.second_chain == iet::Chain::Bottom);
  CHECK(w.second_segment == 3);
  CHECK(w.relation.kind == iet::SegmentClass::ProperCrossing);
  CHECK(*w.relation.point == Point{Scalar(29, 5), Scalar(11, 5)});
}

TEST_CASE("self_intersects flags overlaps away from the shared endpoints") {
  // zeta_1 = zeta_3 = (1,1) and the bottom chain starts with zeta_3, so both
  // chains leave the origin along the same edge.
  const SuspensionDiagram d(Permutation::from_images({2, 3, 1}), {1, 1, 1}, {1, -1, 1});
  const auto report = iet::self_intersects(d);
  CHECK_FALSE(report.simple);
  CHECK_FALSE(oracle_simple(d));
  REQUIRE(report.witness);
  CHECK(report.witness->first_segment == 1);
  CHECK(report.witness->second_segment == 1);
  CHECK(report.witness->relation.kind == iet::SegmentClass::CollinearOverlap);
}

TEST_CASE("self_intersects flags a vertex touching the interior of an edge") {
  // Top (0,0)(2,0)(4,2)(5,1); bottom (0,0)(1,-1)(3,1)(5,1). C^t_1 = (2,0) sits
  // inside the second bottom edge.
  const SuspensionDiagram d(Permutation::from_images({3, 2, 1}), {2, 2, 1}, {0, 2, -1});
  const auto report = iet::self_intersects(d);
  CHECK_FALSE(report.simple);
  CHECK_FALSE(oracle_simple(d));
  REQUIRE(report.witness);
  CHECK(report.witness->first_chain == iet::Chain::Top);
  CHECK(report.witness->first_segment == 1);
  CHECK(report.witness->second_chain == iet::Chain::Bottom);
  CHECK(report.witness->second_segment == 2);
  CHECK(report.witness->relation.kind == iet::SegmentClass::EndpointTouch);
  CHECK(*report.witness->relation.point == Point{2, 0});
}

TEST_CASE("self_intersects agrees with the polygon oracle on random diagrams") {
  iet::testing::Rng rng(iet::testing::seed_or(42));
  int simple = 0, non_simple = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int d = static_cast<int>(rng.integer(2, 7));
    const auto sigma = rng.any_permutation(d);
    std::vector<Scalar> a(d), b(d);
    // Small integers make degenerate contacts frequent.
    for (int i = 0; i < d; ++i) {
      a[i] = rng.integer(1, 3);
      b[i] = rng.integer(-3, 3);
    }
    const SuspensionDiagram diagram(sigma, a, b);
    const bool got = iet::self_intersects(diagram).simple;
    CHECK(got == oracle_simple(diagram));
    (got ? simple : non_simple) += 1;
  }
  CHECK(simple > 100);
  CHECK(non_simple > 100);
}

TEST_CASE("sign_class") {
  CHECK(iet::sign_class(std::vector<Scalar>{1, 2}) == SignClass::AllPositive);
  CHECK(iet::sign_class(std::vector<Scalar>{-1, -2}) == SignClass::AllNegative);
  CHECK(iet::sign_class(std::vector<Scalar>{-1, 2}) == SignClass::Mixed);
  CHECK(iet::sign_class(std::vector<Scalar>{-1, 0, 2}) == SignClass::HasZero);
}

TEST_CASE("pointwise_positive examples") {
  CHECK(iet::pointwise_positive(SuspensionDiagram(Permutation::from_images({2, 1}), {1, 1}, {1, -1})) ==
        SignClass::AllPositive);
  CHECK(iet::pointwise_positive(SuspensionDiagram(Permutation::from_images({3, 2, 1}), {1, 1, 1}, {-1, 0, 1})) ==
        SignClass::AllNegative);
  CHECK(iet::pointwise_positive(SuspensionDiagram(Permutation::from_images({3, 2, 1}), {1, 1, 1}, {0, 0, 0})) ==
        SignClass::HasZero);
}

TEST_CASE("decreasing slopes alone do not force L > 0 pointwise") {
  // Slopes 3 > 1, curve simple, yet L = (-1, 3).
  const SuspensionDiagram d(Permutation::from_images({2, 1}), {1, 1}, {3, 1});
  CHECK(iet::self_intersects(d).simple);
  CHECK(vec(d.return_profile()) == std::vector<Scalar>{-1, 3});
  CHECK(iet::pointwise_positive(d) == SignClass::Mixed);
  // The Lebesgue average is still positive.
  CHECK(iet::lebesgue_mean_return_time(d) == 2);
}
