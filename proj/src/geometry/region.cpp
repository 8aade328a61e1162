#include "setmax/geometry/region.hpp"

#include <algorithm>

#include "setmax/errors.hpp"

namespace setmax::geo {

Region Region::from_polygon(const ConvexPolygon& poly) {
  if (poly.degenerate()) return {};
  const auto& v = poly.vertices();
  std::vector<Line> lines;
  lines.reserve(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) lines.push_back(Line::through(v[t], v[(t + 1) % v.size()]));
  return from_lines(std::move(lines));
}

Region Region::from_lines(std::vector<Line> lines) {
  // Repeated consecutive lines are one edge.
  auto dedupe_lines = [](std::vector<Line>& ls) {
    std::vector<Line> out;
    for (const auto& l : ls) {
      if (out.empty() || !(out.back() == l)) out.push_back(l);
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    ls = std::move(out);
  };
  dedupe_lines(lines);

  // Vertex t joins lines[t-1] and lines[t]; a zero-length edge shows up as
  // two equal consecutive vertices and its line is dropped.
  bool changed = true;
  std::vector<RationalPoint> verts;
  while (changed) {
    changed = false;
    if (lines.size() < 3) return {};
    const std::size_t s = lines.size();
    verts.assign(s, {});
    for (std::size_t t = 0; t < s; ++t) {
      auto p = intersect(lines[(t + s - 1) % s], lines[t]);
      if (!p) return {};
      verts[t] = *p;
    }
    for (std::size_t t = 0; t < s; ++t) {
      if (verts[t] == verts[(t + 1) % s]) {
        lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(t));
        dedupe_lines(lines);
        changed = true;
        break;
      }
    }
  }

  std::size_t start = 0;
  for (std::size_t t = 1; t < verts.size(); ++t) {
    if (lower_left_less(verts[t], verts[start])) start = t;
  }
  std::rotate(lines.begin(), lines.begin() + static_cast<std::ptrdiff_t>(start), lines.end());
  std::rotate(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(start), verts.end());
  Region r;
  r.lines_ = std::move(lines);
  r.vertices_ = std::move(verts);
  return r;
}

bool Region::operator==(const Region& other) const {
  if (vertices_.size() != other.vertices_.size()) return false;
  for (std::size_t t = 0; t < vertices_.size(); ++t) {
    if (!(vertices_[t] == other.vertices_[t])) return false;
  }
  return true;
}

Region clip(const Region& region, const Line& line) {
  if (region.empty()) return {};
  const auto& verts = region.vertices();
  const auto& lines = region.lines();
  const std::size_t s = verts.size();
  std::vector<int> sides(s);
  bool any_out = false;
  bool any_in = false;
  for (std::size_t t = 0; t < s; ++t) {
    sides[t] = side(line, verts[t]);
    any_out |= sides[t] < 0;
    any_in |= sides[t] > 0;
  }
  if (!any_out) return region;
  if (!any_in) return {};

  // Sutherland-Hodgman on one half-plane, tracking the line each surviving
  // edge leaves along.
  std::vector<Line> out;
  out.reserve(s + 1);
  for (std::size_t t = 0; t < s; ++t) {
    int sa = sides[t];
    int sb = sides[(t + 1) % s];
    if (sa >= 0 && sb >= 0) {
      out.push_back(lines[t]);
    } else if (sa >= 0 && sb < 0) {
      if (sa > 0) out.push_back(lines[t]);
      out.push_back(line);
    } else if (sa < 0 && sb > 0) {
      out.push_back(lines[t]);
    }
  }
  return Region::from_lines(std::move(out));
}

Region convex_intersection(const Region& a, const Region& b) {
  if (b.empty()) return {};
  Region r = a;
  for (const auto& l : b.lines()) {
    if (r.empty()) break;
    bool cuts = std::any_of(r.vertices().begin(), r.vertices().end(),
                            [&](const RationalPoint& v) { return side(l, v) < 0; });
    if (cuts) r = clip(r, l);
  }
  return r;
}

Region convex_intersection(const ConvexPolygon& a, const ConvexPolygon& b) {
  return convex_intersection(Region::from_polygon(a), Region::from_polygon(b));
}

Region intersect_all(std::span<const Region* const> regions) {
  if (regions.empty()) throw ContractViolation("intersect_all: no regions");
  Region r = *regions.front();
  for (auto* other : regions.subspan(1)) {
    if (r.empty()) break;
    r = convex_intersection(r, *other);
  }
  return r;
}

bool contains(const Region& outer, const Region& inner) {
  if (inner.empty()) return true;
  if (outer.empty()) return false;
  for (const auto& l : outer.lines()) {
    for (const auto& v : inner.vertices()) {
      if (side(l, v) < 0) return false;
    }
  }
  return true;
}

bool is_strictly_convex(const Region& region) {
  const auto& verts = region.vertices();
  const auto& lines = region.lines();
  const std::size_t s = verts.size();
  if (s < 3) return false;
  for (std::size_t t = 0; t < s; ++t) {
    // edge t carries vertices t and t+1
    if (side(lines[t], verts[t]) != 0 || side(lines[t], verts[(t + 1) % s]) != 0) return false;
    for (std::size_t u = 0; u < s; ++u) {
      if (u == t || u == (t + 1) % s) continue;
      if (side(lines[t], verts[u]) <= 0) return false;
    }
  }
  return true;
}

}  // namespace setmax::geo
