#pragma once

#include <compare>
#include <cstdint>
#include <optional>

namespace setmax::geo {

using i128 = __int128;

// Input coordinates satisfy |x|, |y| <= kCoordLimit. Every derived quantity
// (line offsets, intersection numerators, side tests on intersection
// vertices) then fits in 128 bits with room to spare.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 20;

struct Point2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const Point2&) const = default;
};

bool in_coordinate_range(Point2 p);

// Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear.
int orientation(Point2 p, Point2 q, Point2 r);

/// Exact rational point (x / d, y / d) with d > 0.
struct RationalPoint {
  i128 x = 0;
  i128 y = 0;
  i128 d = 1;

  static RationalPoint from(Point2 p) { return {p.x, p.y, 1}; }
};

bool operator==(const RationalPoint& a, const RationalPoint& b);
// Lower y first, then lower x.
bool lower_left_less(const RationalPoint& a, const RationalPoint& b);
double to_double_x(const RationalPoint& p);
double to_double_y(const RationalPoint& p);

/// Oriented line through two integer points, interior on the left. The
/// direction is reduced by its gcd so equal oriented lines compare equal.
struct Line {
  std::int64_t dx = 0;
  std::int64_t dy = 0;
  std::int64_t c = 0;  // dx * y - dy * x == c on the line

  static Line through(Point2 from, Point2 to);
  bool operator==(const Line&) const = default;
};

// Sign of the position of pt relative to line: +1 left (interior), 0 on it.
int side(const Line& line, const RationalPoint& pt);
int side(const Line& line, Point2 pt);

// Intersection of two non-parallel lines.
std::optional<RationalPoint> intersect(const Line& a, const Line& b);

}  // namespace setmax::geo
