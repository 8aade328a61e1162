#include <gtest/gtest.h>

#include <random>

#include "setmax/errors.hpp"
#include "setmax/geometry/polygon.hpp"
#include "setmax/geometry/region.hpp"

using namespace setmax::geo;

namespace {

ConvexPolygon square(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1) {
  return ConvexPolygon::from_vertices({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

// Every edge checked, no search.
Containment all_edges(const ConvexPolygon& poly, Point2 pt) {
  const auto& v = poly.vertices();
  bool on = false;
  for (std::size_t t = 0; t < v.size(); ++t) {
    int o = orientation(v[t], v[(t + 1) % v.size()], pt);
    if (o < 0) return Containment::outside;
    on |= o == 0;
  }
  return on ? Containment::boundary : Containment::inside;
}

ConvexPolygon random_polygon(std::mt19937_64& rng, std::int64_t cx, std::int64_t cy, std::int64_t r,
                             std::size_t pts) {
  std::uniform_int_distribution<std::int64_t> d(-r, r);
  std::vector<Point2> cloud;
  while (cloud.size() < pts) cloud.push_back({cx + d(rng), cy + d(rng)});
  return ConvexPolygon::from_vertices(convex_hull(cloud));
}

std::vector<RationalPoint> rational(std::initializer_list<Point2> pts) {
  std::vector<RationalPoint> out;
  for (auto p : pts) out.push_back(RationalPoint::from(p));
  return out;
}

}  // namespace

TEST(ConvexPolygon, ValidationAndOrientation) {
  auto cw = ConvexPolygon::from_vertices({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  EXPECT_TRUE(is_strictly_convex_ccw(cw.vertices()));
  EXPECT_THROW(ConvexPolygon::from_vertices({{0, 0}, {2, 0}, {1, 0}, {1, 1}}), setmax::InputError);
  EXPECT_THROW(ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {2, 0}}), setmax::InputError);
  EXPECT_THROW(ConvexPolygon::from_vertices({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), setmax::InputError);
  EXPECT_THROW(ConvexPolygon::from_vertices({{0, 0}, {kCoordLimit + 1, 0}, {0, 1}}), setmax::InputError);
  EXPECT_THROW(ConvexPolygon::from_vertices({}), setmax::InputError);
  EXPECT_TRUE(ConvexPolygon::from_vertices({{3, 3}}).degenerate());
}

TEST(PointInConvex, UnitSquare) {
  auto sq = square(0, 0, 1, 1);
  EXPECT_EQ(point_in_convex(sq, {1, 1}), Containment::boundary);
  EXPECT_EQ(point_in_convex(sq, {0, 0}), Containment::boundary);
  EXPECT_EQ(point_in_convex(sq, {2, 0}), Containment::outside);
  EXPECT_EQ(point_in_convex(sq, {-1, 0}), Containment::outside);
  auto big = square(0, 0, 4, 4);
  EXPECT_EQ(point_in_convex(big, {2, 2}), Containment::inside);
  EXPECT_EQ(point_in_convex(big, {4, 2}), Containment::boundary);
}

TEST(PointInConvex, DegenerateShapes) {
  auto pt = ConvexPolygon::from_vertices({{3, 4}});
  EXPECT_EQ(point_in_convex(pt, {3, 4}), Containment::boundary);
  EXPECT_EQ(point_in_convex(pt, {3, 5}), Containment::outside);
  auto seg = ConvexPolygon::from_vertices({{0, 0}, {4, 2}});
  EXPECT_EQ(point_in_convex(seg, {2, 1}), Containment::boundary);
  EXPECT_EQ(point_in_convex(seg, {6, 3}), Containment::outside);
  EXPECT_EQ(point_in_convex(seg, {2, 2}), Containment::outside);
}

TEST(PointInConvex, MatchesAllEdgesOracle) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    auto poly = random_polygon(rng, 0, 0, 60, 3 + rng() % 25);
    for (std::int64_t x = -62; x <= 62; x += 3) {
      for (std::int64_t y = -62; y <= 62; y += 2) {
        ASSERT_EQ(point_in_convex(poly, {x, y}), all_edges(poly, {x, y}));
      }
    }
    for (auto v : poly.vertices()) ASSERT_EQ(point_in_convex(poly, v), Containment::boundary);
  }
}

TEST(ConvexHull, DropsInteriorAndCollinear) {
  auto hull = convex_hull({{0, 0}, {2, 0}, {4, 0}, {4, 4}, {2, 2}, {0, 4}, {0, 2}, {4, 4}});
  EXPECT_EQ(hull, (std::vector<Point2>{{0, 0}, {4, 0}, {4, 4}, {0, 4}}));
  EXPECT_EQ(convex_hull({{1, 1}, {2, 2}, {3, 3}}).size(), 2u);
  EXPECT_EQ(convex_hull({{5, 5}, {5, 5}}).size(), 1u);
}

TEST(ConvexHull, RandomCloudsContainAllPoints) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
  for (int t = 0; t < 200; ++t) {
    std::vector<Point2> cloud(5 + rng() % 60);
    for (auto& p : cloud) p = {d(rng), d(rng)};
    auto hull = convex_hull(cloud);
    ASSERT_TRUE(is_strictly_convex_ccw(hull));
    auto poly = ConvexPolygon::from_vertices(hull);
    for (auto p : cloud) ASSERT_NE(point_in_convex(poly, p), Containment::outside);
  }
}

TEST(Region, FromPolygonStartsLowestLeftmost) {
  auto r = Region::from_polygon(ConvexPolygon::from_vertices({{2, 2}, {0, 2}, {0, 0}, {2, 0}}));
  EXPECT_EQ(r.vertices(), rational({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  EXPECT_EQ(r.lines()[0], Line::through({0, 0}, {2, 0}));
  EXPECT_TRUE(is_strictly_convex(r));
  EXPECT_TRUE(Region::from_polygon(ConvexPolygon::from_vertices({{0, 0}, {1, 1}})).empty());
}

TEST(Region, OverlappingSquares) {
  auto r = convex_intersection(square(0, 0, 2, 2), square(1, 1, 3, 3));
  EXPECT_EQ(r, Region::from_polygon(square(1, 1, 2, 2)));
  EXPECT_EQ(r.size(), 4u);
}

TEST(Region, SelfIntersectionAndDisjoint) {
  auto p = square(0, 0, 5, 3);
  EXPECT_EQ(convex_intersection(p, p), Region::from_polygon(p));
  EXPECT_TRUE(convex_intersection(p, square(10, 10, 12, 12)).empty());
  // Touching along an edge or at a corner has zero area.
  EXPECT_TRUE(convex_intersection(p, square(5, 0, 7, 3)).empty());
  EXPECT_TRUE(convex_intersection(p, square(5, 3, 7, 5)).empty());
}

TEST(Region, RationalVertices) {
  auto tri = ConvexPolygon::from_vertices({{0, 0}, {3, 0}, {0, 3}});
  auto r = convex_intersection(tri, square(1, 0, 3, 3));
  // Triangle (1,0),(3,0),(1,2).
  EXPECT_EQ(r.vertices(), rational({{1, 0}, {3, 0}, {1, 2}}));
  auto skew = convex_intersection(ConvexPolygon::from_vertices({{0, 0}, {3, 0}, {0, 2}}),
                                  ConvexPolygon::from_vertices({{0, 0}, {2, 0}, {2, 3}}));
  // Both hypotenuses cross at (12/13, 18/13); the second cuts x = 2 at y = 2/3.
  ASSERT_EQ(skew.size(), 4u);
  EXPECT_EQ(skew.vertices()[2], (RationalPoint{6, 2, 3}));
  EXPECT_EQ(skew.vertices()[3], (RationalPoint{12, 18, 13}));
}

TEST(Region, ClipCases) {
  auto r = Region::from_polygon(square(0, 0, 4, 4));
  EXPECT_EQ(clip(r, Line::through({0, -1}, {4, -1})), r);
  EXPECT_TRUE(clip(r, Line::through({0, 5}, {4, 5})).empty());
  // Through a vertex: keeps a triangle.
  auto half = clip(r, Line::through({4, 0}, {0, 4}));
  EXPECT_EQ(half.vertices(), rational({{0, 0}, {4, 0}, {0, 4}}));
  // Supporting line: unchanged.
  EXPECT_EQ(clip(r, Line::through({0, 0}, {4, 0})), r);
  // Opposite orientation of a supporting line leaves no area.
  EXPECT_TRUE(clip(r, Line::through({4, 0}, {0, 0})).empty());
}

TEST(Region, IntersectionIsMonotoneAndConvex) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    std::vector<Region> rs;
    for (int j = 0; j < 5; ++j) {
      rs.push_back(Region::from_polygon(random_polygon(rng, int(rng() % 40), int(rng() % 40), 50, 12)));
    }
    Region acc = rs[0];
    std::vector<const Region*> ptrs{&rs[0]};
    for (std::size_t j = 1; j < rs.size(); ++j) {
      Region next = convex_intersection(acc, rs[j]);
      ASSERT_TRUE(contains(acc, next));
      ASSERT_TRUE(contains(rs[j], next));
      if (!next.empty()) ASSERT_TRUE(is_strictly_convex(next));
      ASSERT_EQ(next, convex_intersection(rs[j], acc));
      acc = next;
      ptrs.push_back(&rs[j]);
    }
    ASSERT_EQ(intersect_all(ptrs), acc);
  }
  EXPECT_THROW(intersect_all({}), setmax::ContractViolation);
}

TEST(Region, IntersectionAgreesWithPointMembership) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 200; ++t) {
    auto a = random_polygon(rng, 0, 0, 30, 10);
    auto b = random_polygon(rng, int(rng() % 20), int(rng() % 20), 30, 10);
    auto r = convex_intersection(a, b);
    for (std::int64_t x = -32; x <= 52; x += 2) {
      for (std::int64_t y = -32; y <= 52; y += 2) {
        bool inside_both = point_in_convex(a, {x, y}) == Containment::inside &&
                           point_in_convex(b, {x, y}) == Containment::inside;
        if (!inside_both) continue;
        ASSERT_FALSE(r.empty());
        for (const auto& l : r.lines()) ASSERT_GT(side(l, Point2{x, y}), 0);
      }
    }
  }
}
