#pragma once

#include <optional>
#include <string_view>

#include "iet/scalar.hpp"

namespace iet {

struct Point {
  Scalar x;
  Scalar y;
  friend bool operator==(const Point&, const Point&) = default;
};

Point operator+(const Point& p, const Point& q);
Point operator-(const Point& p, const Point& q);

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

enum class SegmentClass { Disjoint, ProperCrossing, EndpointTouch, CollinearOverlap };

std::string_view to_string(SegmentClass c);

struct Segment {
  Point from;
  Point to;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Exact relation between closed segments [p0,p1] and [q0,q1].
///   ProperCrossing    interiors cross at a single point (`point`).
///   EndpointTouch     they share exactly one point that is an endpoint of
///                     at least one of them (`point`).
///   CollinearOverlap  they share a sub-segment of positive length (`overlap`).
struct SegmentRelation {
  SegmentClass kind = SegmentClass::Disjoint;
  std::optional<Point> point;
  std::optional<Segment> overlap;
};

/// Throws DegenerateSegment if either segment has coincident endpoints.
SegmentRelation segment_relation(const Point& p0, const Point& p1, const Point& q0, const Point& q1);

}  // namespace iet
