#pragma once

#include <cstdint>

#include "setmax/geometry/instance.hpp"
#include "setmax/set_system.hpp"

namespace setmax::harness {

// m distinct non-empty sets; each element joins each set with probability
// density. Deterministic per seed. Throws GenerationError when m distinct
// sets cannot be drawn within the retry budget.
SetSystem gen_random_system(std::size_t n, std::size_t m, double density, std::uint64_t seed);

struct ConvexGenOptions {
  // Mean number of sampling discs over a point of the box; sets the polygon
  // radius as m grows. Polygons fill roughly a third (k = 3) to two thirds
  // (k = 8) of their disc.
  double depth = 3.0;
  // Points are drawn from [-half_box, half_box]^2.
  std::int64_t half_box = std::int64_t{1} << 19;
};

// n random points and m random convex polygons with at most k sides whose
// induced sets are non-empty and pairwise distinct. Polygons: 3k points in a
// random disc, their hull, then k hull vertices kept at random.
geo::GeometricInstance gen_convex_instance(std::size_t n, std::size_t m, std::size_t k,
                                           std::uint64_t seed, const ConvexGenOptions& options = {});

// Seed for the t-th sub-stream of a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace setmax::harness
