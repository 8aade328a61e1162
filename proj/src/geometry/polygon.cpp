#include "setmax/geometry/polygon.hpp"

#include <algorithm>
#include <string>

#include "setmax/errors.hpp"

namespace setmax::geo {

bool is_strictly_convex_ccw(std::span<const Point2> v) {
  const std::size_t s = v.size();
  if (s < 3) return false;
  for (std::size_t a = 0; a < s; ++a) {
    Point2 from = v[a];
    Point2 to = v[(a + 1) % s];
    if (from == to) return false;
    for (std::size_t b = 0; b < s; ++b) {
      if (b == a || b == (a + 1) % s) continue;
      if (orientation(from, to, v[b]) <= 0) return false;
    }
  }
  return true;
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point2> vertices) {
  for (auto p : vertices) {
    if (!in_coordinate_range(p)) {
      throw InputError("polygon vertex (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                       ") exceeds the coordinate limit");
    }
  }
  if (vertices.empty()) throw InputError("polygon has no vertices");
  if (vertices.size() == 2 && vertices[0] == vertices[1]) vertices.pop_back();
  if (vertices.size() >= 3) {
    if (!is_strictly_convex_ccw(vertices)) {
      std::reverse(vertices.begin(), vertices.end());
      if (!is_strictly_convex_ccw(vertices)) {
        throw InputError("polygon is not strictly convex");
      }
    }
  }
  ConvexPolygon poly;
  poly.vertices_ = std::move(vertices);
  return poly;
}

namespace {

Containment on_segment(Point2 a, Point2 b, Point2 pt) {
  if (orientation(a, b, pt) != 0) return Containment::outside;
  if (pt.x < std::min(a.x, b.x) || pt.x > std::max(a.x, b.x)) return Containment::outside;
  if (pt.y < std::min(a.y, b.y) || pt.y > std::max(a.y, b.y)) return Containment::outside;
  return Containment::boundary;
}

}  // namespace

Containment point_in_convex(const ConvexPolygon& poly, Point2 pt) {
  const auto& v = poly.vertices();
  const std::size_t s = v.size();
  if (s == 1) return v[0] == pt ? Containment::boundary : Containment::outside;
  if (s == 2) return on_segment(v[0], v[1], pt);

  // Fan from v[0]: locate the wedge (v[lo], v[lo+1]) holding pt.
  int first = orientation(v[0], v[1], pt);
  int last = orientation(v[0], v[s - 1], pt);
  if (first < 0 || last > 0) return Containment::outside;
  if (first == 0) return on_segment(v[0], v[1], pt);
  if (last == 0) return on_segment(v[0], v[s - 1], pt);
  std::size_t lo = 1, hi = s - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (orientation(v[0], v[mid], pt) >= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  int o = orientation(v[lo], v[lo + 1], pt);
  if (o < 0) return Containment::outside;
  if (o == 0) return Containment::boundary;
  return Containment::inside;
}

std::vector<Point2> convex_hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(),
            [](Point2 a, Point2 b) { return a.y != b.y ? a.y < b.y : a.x < b.x; });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  // Andrew's monotone chain on (y, x) order gives a CCW hull starting at the
  // lowest-then-leftmost point.
  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (auto p : points) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orientation(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace setmax::geo
