#include "setmax/geometry/predicates.hpp"

#include <numeric>

#include "setmax/errors.hpp"

namespace setmax::geo {

namespace {
int sign(i128 v) { return (v > 0) - (v < 0); }
}  // namespace

bool in_coordinate_range(Point2 p) {
  return p.x >= -kCoordLimit && p.x <= kCoordLimit && p.y >= -kCoordLimit && p.y <= kCoordLimit;
}

int orientation(Point2 p, Point2 q, Point2 r) {
  std::int64_t cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return (cross > 0) - (cross < 0);
}

bool operator==(const RationalPoint& a, const RationalPoint& b) {
  return a.x * b.d == b.x * a.d && a.y * b.d == b.y * a.d;
}

bool lower_left_less(const RationalPoint& a, const RationalPoint& b) {
  i128 ay = a.y * b.d;
  i128 by = b.y * a.d;
  if (ay != by) return ay < by;
  return a.x * b.d < b.x * a.d;
}

double to_double_x(const RationalPoint& p) {
  return static_cast<double>(p.x) / static_cast<double>(p.d);
}

double to_double_y(const RationalPoint& p) {
  return static_cast<double>(p.y) / static_cast<double>(p.d);
}

Line Line::through(Point2 from, Point2 to) {
  if (from == to) throw ContractViolation("Line::through: coincident points");
  std::int64_t dx = to.x - from.x;
  std::int64_t dy = to.y - from.y;
  std::int64_t g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
  dx /= g;
  dy /= g;
  return Line{dx, dy, dx * from.y - dy * from.x};
}

int side(const Line& line, const RationalPoint& pt) {
  i128 v = i128{line.dx} * pt.y - i128{line.dy} * pt.x - i128{line.c} * pt.d;
  return sign(v);
}

int side(const Line& line, Point2 pt) {
  std::int64_t v = line.dx * pt.y - line.dy * pt.x - line.c;
  return (v > 0) - (v < 0);
}

std::optional<RationalPoint> intersect(const Line& a, const Line& b) {
  // -dy x + dx y = c for each line; Cramer's rule.
  i128 det = i128{a.dx} * b.dy - i128{a.dy} * b.dx;
  if (det == 0) return std::nullopt;
  i128 x = i128{a.c} * b.dx - i128{a.dx} * b.c;
  i128 y = i128{b.dy} * a.c - i128{a.dy} * b.c;
  if (det < 0) {
    det = -det;
    x = -x;
    y = -y;
  }
  return RationalPoint{x, y, det};
}

}  // namespace setmax::geo
