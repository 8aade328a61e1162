#include "setmax/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace setmax::kernels {

using geo::ConvexPolygon;
using geo::Point2;

namespace {

// Uniform grid over the bounding box of the points, about one point per cell.
class PointGrid {
 public:
  explicit PointGrid(std::span<const Point2> points) : points_(points) {
    if (points.empty()) return;
    min_x_ = max_x_ = points[0].x;
    min_y_ = max_y_ = points[0].y;
    for (auto p : points) {
      min_x_ = std::min(min_x_, p.x);
      max_x_ = std::max(max_x_, p.x);
      min_y_ = std::min(min_y_, p.y);
      max_y_ = std::max(max_y_, p.y);
    }
    side_ = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::sqrt(double(points.size()))));
    cell_w_ = (max_x_ - min_x_) / side_ + 1;
    cell_h_ = (max_y_ - min_y_) / side_ + 1;
    std::vector<std::uint32_t> counts(static_cast<std::size_t>(side_ * side_) + 1, 0);
    for (auto p : points) ++counts[cell(p) + 1];
    for (std::size_t c = 1; c < counts.size(); ++c) counts[c] += counts[c - 1];
    start_ = counts;
    order_.resize(points.size());
    for (ElementIndex e = 0; e < points.size(); ++e) order_[counts[cell(points[e])]++] = e;
  }

  // Calls f(e) for every point whose cell meets the box.
  template <class F>
  void for_each_in_box(std::int64_t lo_x, std::int64_t lo_y, std::int64_t hi_x, std::int64_t hi_y,
                       F&& f) const {
    if (points_.empty() || hi_x < min_x_ || lo_x > max_x_ || hi_y < min_y_ || lo_y > max_y_) return;
    auto cx0 = col(std::max(lo_x, min_x_)), cx1 = col(std::min(hi_x, max_x_));
    auto cy0 = row(std::max(lo_y, min_y_)), cy1 = row(std::min(hi_y, max_y_));
    for (auto cy = cy0; cy <= cy1; ++cy) {
      for (auto cx = cx0; cx <= cx1; ++cx) {
        auto c = static_cast<std::size_t>(cy * side_ + cx);
        for (auto t = start_[c]; t < start_[c + 1]; ++t) f(order_[t]);
      }
    }
  }

 private:
  std::int64_t col(std::int64_t x) const { return (x - min_x_) / cell_w_; }
  std::int64_t row(std::int64_t y) const { return (y - min_y_) / cell_h_; }
  std::size_t cell(Point2 p) const { return static_cast<std::size_t>(row(p.y) * side_ + col(p.x)); }

  std::span<const Point2> points_;
  std::int64_t min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
  std::int64_t side_ = 1, cell_w_ = 1, cell_h_ = 1;
  std::vector<std::uint32_t> start_;
  std::vector<ElementIndex> order_;
};

std::vector<ElementIndex> members_of(const PointGrid& grid, std::span<const Point2> points,
                                     const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  std::int64_t lo_x = v[0].x, hi_x = v[0].x, lo_y = v[0].y, hi_y = v[0].y;
  for (auto p : v) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  std::vector<ElementIndex> out;
  grid.for_each_in_box(lo_x, lo_y, hi_x, hi_y, [&](ElementIndex e) {
    if (geo::is_member(geo::point_in_convex(poly, points[e]))) out.push_back(e);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<ElementIndex>> containment(std::span<const Point2> points,
                                                   std::span<const ConvexPolygon> polygons) {
  PointGrid grid(points);
  std::vector<std::vector<ElementIndex>> members(polygons.size());
  const auto count = static_cast<std::ptrdiff_t>(polygons.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    members[static_cast<std::size_t>(j)] = members_of(grid, points, polygons[static_cast<std::size_t>(j)]);
  }
  return members;
}

std::vector<geo::Region> label_regions(const geo::GeometricLattice& g,
                                       std::span<const Label> labels) {
  std::vector<geo::Region> out(labels.size());
  const auto count = static_cast<std::ptrdiff_t>(labels.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    out[static_cast<std::size_t>(t)] = geo::label_region(g, labels[static_cast<std::size_t>(t)]);
  }
  return out;
}

std::vector<geo::GeometricCover> geometric_covers(const geo::GeometricLattice& g,
                                                  std::span<const NodeId> nodes) {
  std::vector<geo::GeometricCover> out(nodes.size());
  const auto count = static_cast<std::ptrdiff_t>(nodes.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    NodeId id = nodes[static_cast<std::size_t>(t)];
    out[static_cast<std::size_t>(t)] = geo::geometric_cover(g, g.lattice.node(id).label, g.regions[id]);
  }
  return out;
}

namespace serial {

std::vector<std::vector<ElementIndex>> containment(std::span<const Point2> points,
                                                   std::span<const ConvexPolygon> polygons) {
  std::vector<std::vector<ElementIndex>> members(polygons.size());
  for (std::size_t j = 0; j < polygons.size(); ++j) {
    for (ElementIndex e = 0; e < points.size(); ++e) {
      if (geo::is_member(geo::point_in_convex(polygons[j], points[e]))) members[j].push_back(e);
    }
  }
  return members;
}

std::vector<geo::Region> label_regions(const geo::GeometricLattice& g,
                                       std::span<const Label> labels) {
  std::vector<geo::Region> out;
  out.reserve(labels.size());
  for (const auto& label : labels) out.push_back(geo::label_region(g, label));
  return out;
}

std::vector<geo::GeometricCover> geometric_covers(const geo::GeometricLattice& g,
                                                  std::span<const NodeId> nodes) {
  std::vector<geo::GeometricCover> out;
  out.reserve(nodes.size());
  for (auto id : nodes) out.push_back(geo::geometric_cover(g, g.lattice.node(id).label, g.regions[id]));
  return out;
}

}  // namespace serial

}  // namespace setmax::kernels
