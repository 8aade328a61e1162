#pragma once

#include <span>
#include <vector>

#include "setmax/geometry/predicates.hpp"

namespace setmax::geo {

/// Strictly convex polygon with integer vertices in counter-clockwise order.
/// One- and two-vertex polygons are allowed as degenerate regions (a point or
/// a segment); they contain exactly the points lying on them.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  // Validates coordinates and strict convexity. Clockwise input is reversed.
  // Throws InputError on anything else.
  static ConvexPolygon from_vertices(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t sides() const { return vertices_.size(); }
  bool degenerate() const { return vertices_.size() < 3; }

  bool operator==(const ConvexPolygon&) const = default;

 private:
  std::vector<Point2> vertices_;
};

enum class Containment { inside, boundary, outside };

inline bool is_member(Containment c) { return c != Containment::outside; }

// O(log s) wedge search for s >= 3.
Containment point_in_convex(const ConvexPolygon& poly, Point2 pt);

// Strict convex hull (collinear points dropped), counter-clockwise, starting
// at the lowest-then-leftmost point.
std::vector<Point2> convex_hull(std::vector<Point2> points);

// True iff every consecutive triple turns strictly left and the boundary
// winds exactly once.
bool is_strictly_convex_ccw(std::span<const Point2> vertices);

}  // namespace setmax::geo
