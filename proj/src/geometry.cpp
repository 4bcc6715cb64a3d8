#include "iet/geometry.hpp"

#include <algorithm>
#include <utility>

#include "iet/error.hpp"

namespace iet {

Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }

namespace {

// Callers guarantee canonical coordinates.
int orient(const Point& a, const Point& b, const Point& c) {
  const Scalar cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(cross);
}

Point canonical(const Point& p) { return {iet::canonical(p.x), iet::canonical(p.y)}; }

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
  return orient(canonical(a), canonical(b), canonical(c));
}

std::string_view to_string(SegmentClass c) {
  switch (c) {
    case SegmentClass::Disjoint: return "Disjoint";
    case SegmentClass::ProperCrossing: return "ProperCrossing";
    case SegmentClass::EndpointTouch: return "EndpointTouch";
    case SegmentClass::CollinearOverlap: return "CollinearOverlap";
  }
  return "Unknown";
}

namespace {

bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Assumes p is collinear with [a, b].
bool within_box(const Point& p, const Point& a, const Point& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

SegmentRelation touch(const Point& p) { return {SegmentClass::EndpointTouch, p, std::nullopt}; }

}  // namespace

SegmentRelation segment_relation(const Point& raw_p0, const Point& raw_p1, const Point& raw_q0, const Point& raw_q1) {
  const Point p0 = canonical(raw_p0), p1 = canonical(raw_p1), q0 = canonical(raw_q0), q1 = canonical(raw_q1);
  if (p0 == p1 || q0 == q1) throw Error(ErrorKind::DegenerateSegment, "segment endpoints coincide");

  // Bounding boxes apart: nothing else to decide.
  if (std::max(p0.x, p1.x) < std::min(q0.x, q1.x) || std::max(q0.x, q1.x) < std::min(p0.x, p1.x) ||
      std::max(p0.y, p1.y) < std::min(q0.y, q1.y) || std::max(q0.y, q1.y) < std::min(p0.y, p1.y)) {
    return {};
  }

  const int o1 = orient(p0, p1, q0);
  const int o2 = orient(p0, p1, q1);
  const int o3 = orient(q0, q1, p0);
  const int o4 = orient(q0, q1, p1);

  if (o1 == 0 && o2 == 0) {
    // Collinear: intersect the two ranges along the common line.
    auto [a0, a1] = lex_less(p1, p0) ? std::pair{p1, p0} : std::pair{p0, p1};
    auto [b0, b1] = lex_less(q1, q0) ? std::pair{q1, q0} : std::pair{q0, q1};
    const Point& lo = lex_less(a0, b0) ? b0 : a0;
    const Point& hi = lex_less(a1, b1) ? a1 : b1;
    if (lex_less(hi, lo)) return {};
    if (lo == hi) return touch(lo);
    return {SegmentClass::CollinearOverlap, std::nullopt, Segment{lo, hi}};
  }

  if (o1 * o2 < 0 && o3 * o4 < 0) {
    const Point r = p1 - p0;
    const Point s = q1 - q0;
    const Point w = q0 - p0;
    const Scalar t = (w.x * s.y - w.y * s.x) / (r.x * s.y - r.y * s.x);
    return {SegmentClass::ProperCrossing, Point{p0.x + t * r.x, p0.y + t * r.y}, std::nullopt};
  }

  if (o1 == 0 && within_box(q0, p0, p1)) return touch(q0);
  if (o2 == 0 && within_box(q1, p0, p1)) return touch(q1);
  if (o3 == 0 && within_box(p0, q0, q1)) return touch(p0);
  if (o4 == 0 && within_box(p1, q0, q1)) return touch(p1);
  return {};
}

}  // namespace iet
