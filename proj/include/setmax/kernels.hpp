#pragma once

// Data-parallel kernels of the geometric pipeline. Each has a serial
// reference with the same signature in kernels::serial; tests check they
// agree and bench/ compares their speed.

#include <span>
#include <vector>

#include "setmax/geometry/instance.hpp"

namespace setmax::kernels {

// members[j] = ascending indices of points inside or on polygon j.
// Points are bucketed in a uniform grid; polygons are processed in parallel.
std::vector<std::vector<ElementIndex>> containment(std::span<const geo::Point2> points,
                                                   std::span<const geo::ConvexPolygon> polygons);

std::vector<geo::Region> label_regions(const geo::GeometricLattice& g,
                                       std::span<const Label> labels);

std::vector<geo::GeometricCover> geometric_covers(const geo::GeometricLattice& g,
                                                  std::span<const NodeId> nodes);

namespace serial {

// Every point against every polygon.
std::vector<std::vector<ElementIndex>> containment(std::span<const geo::Point2> points,
                                                   std::span<const geo::ConvexPolygon> polygons);

std::vector<geo::Region> label_regions(const geo::GeometricLattice& g,
                                       std::span<const Label> labels);

std::vector<geo::GeometricCover> geometric_covers(const geo::GeometricLattice& g,
                                                  std::span<const NodeId> nodes);

}  // namespace serial

}  // namespace setmax::kernels
