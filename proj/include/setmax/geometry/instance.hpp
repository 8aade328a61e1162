#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "setmax/geometry/polygon.hpp"
#include "setmax/geometry/region.hpp"
#include "setmax/lattice.hpp"
#include "setmax/set_system.hpp"
#include "setmax/solvers.hpp"

namespace setmax::geo {

/// Points carrying the keys, convex polygons standing for the sets. Point i
/// belongs to set j iff it lies inside or on polygon j.
struct GeometricInstance {
  std::vector<Point2> points;
  std::vector<ConvexPolygon> polygons;
  std::size_t k = 0;  // bound on polygon side counts
};

// Throws InputError on out-of-range coordinates or polygons with more than k sides.
void validate_instance(const GeometricInstance& inst);

// Largest side count over the polygons.
std::size_t max_sides(const GeometricInstance& inst);

SetSystem induced_system(const GeometricInstance& inst);

struct GeometricStats {
  std::size_t nodes_covered = 0;
  std::size_t total_cover_size = 0;
  std::size_t max_cover_size = 0;
  std::size_t virtual_nodes = 0;
  std::size_t waves = 0;
  // Nodes whose constructive cover failed and used greedy instead.
  std::size_t fallbacks = 0;
  // Nodes with a zero-area intersection region.
  std::size_t degenerate_regions = 0;
  // Covers larger than k.
  std::size_t oversized_covers = 0;
  // Cover member pairs whose chains relative to the node share an edge.
  std::size_t chain_overlaps = 0;
  // Nodes whose region equals one of its own polygons.
  std::size_t nested_nodes = 0;
  // Nodes where the first k edges missed some polygon and a later k-subset
  // of edges was needed.
  std::size_t shifted_hitting_sets = 0;
  std::vector<std::string> warnings;  // first few fallback reasons
};

/// The lattice of a geometric instance together with the intersection region
/// of every node (regions[id]; empty for zero-area intersections).
struct GeometricLattice {
  SetSystem system;
  Lattice lattice;
  std::vector<Region> polygon_regions;
  std::vector<Region> regions;
  std::size_t k = 0;
  GeometricStats stats;
};

// Set system by containment, lattice from point signatures, region of each
// node by iterated intersection. No key comparisons.
GeometricLattice build_geometric_instance(const GeometricInstance& inst);

// Intersection of the polygons named by label.
Region label_region(const GeometricLattice& g, const Label& label);

struct GeometricCover {
  std::vector<Label> labels;     // sorted, each a strict subset of the node label
  std::vector<Region> regions;   // region of each label
  bool fallback = false;
  std::string reason;            // set when fallback
  bool nested = false;
  bool shifted = false;          // the first k edges did not hit every polygon
  std::size_t chain_overlaps = 0;
};

// Constructive cover of a node label with intersection region:
//  1. for each edge e of the region, I_e = polygons of the label that do not
//     have e on their boundary;
//  2. pick a set T of at most k edges so every polygon is off some edge of T
//     (k-subsets are searched in lexicographic order from the first k edges);
//  3. candidates I_e for e in T, merged pairwise while the merged region is
//     strictly larger than the node region;
//  4. a polygon equal to the node region is covered by its own singleton.
// Reports fallback instead of throwing when no valid cover is found.
GeometricCover geometric_cover(const GeometricLattice& g, const Label& label,
                               const Region& region);

// Assigns good_cover for every node at layer >= 2, inserting virtual nodes
// for cover labels missing from the lattice until no new labels appear.
void assign_geometric_covers(GeometricLattice& g);

struct GeometricSolve {
  MaximaResult result;
  GeometricStats stats;
  std::size_t lattice_nodes = 0;
};

GeometricSolve solve_geometric(const GeometricInstance& inst, const KeySpace& keys,
                               const LatticeSolveOptions& options = {
                                   CoverMode::geometric, kDefaultExactBudget, false, false});

// Points on a circle of radius 2^18 in strictly convex position; polygon j
// is the hull of set j's points (a segment or a point for sets below three).
GeometricInstance circle_embedding(const SetSystem& system);

}  // namespace setmax::geo
