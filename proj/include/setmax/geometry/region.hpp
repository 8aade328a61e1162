#pragma once

#include <span>
#include <vector>

#include "setmax/geometry/polygon.hpp"
#include "setmax/geometry/predicates.hpp"

namespace setmax::geo {

/// A strictly convex region with non-empty interior, or empty. Every edge
/// lies on the supporting line of some input polygon edge, so vertices are
/// exact intersections of two such lines.
///
/// Edge t runs from vertices[t] to vertices[t + 1] along lines[t]. The cycle
/// starts at the lowest-then-leftmost vertex.
class Region {
 public:
  Region() = default;

  // Empty for degenerate polygons.
  static Region from_polygon(const ConvexPolygon& poly);
  // Builds from a counter-clockwise cycle of supporting lines; consecutive
  // duplicate vertices and repeated lines are merged. Empty if fewer than
  // three edges survive.
  static Region from_lines(std::vector<Line> lines);

  bool empty() const { return lines_.empty(); }
  std::size_t size() const { return lines_.size(); }
  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<RationalPoint>& vertices() const { return vertices_; }

  // Same cycle of vertices.
  bool operator==(const Region& other) const;

 private:
  std::vector<Line> lines_;
  std::vector<RationalPoint> vertices_;
};

// Region intersected with the closed left half-plane of line. Intersections of
// zero area (a point or a segment) come back empty.
Region clip(const Region& region, const Line& line);

Region convex_intersection(const Region& a, const Region& b);
Region convex_intersection(const ConvexPolygon& a, const ConvexPolygon& b);

// Intersection of every region in the span; empty span is a contract violation.
Region intersect_all(std::span<const Region* const> regions);

// inner is a subset of outer (closed regions). Empty inner is contained.
bool contains(const Region& outer, const Region& inner);

// Exact check that every vertex lies strictly inside all non-incident edges.
bool is_strictly_convex(const Region& region);

}  // namespace setmax::geo
