#pragma once

#include <vector>

#include "setmax/geometry/polygon.hpp"
#include "setmax/geometry/region.hpp"

namespace setmax::geo {

/// A maximal run of consecutive edges of an inner region that do not lie on
/// the boundary of the outer region. Edge indices follow the inner region's
/// boundary order and may wrap past the last edge.
struct Chain {
  std::vector<std::size_t> edges;
  bool operator==(const Chain&) const = default;
};

// shared[t] is true iff edge t of inner lies within an edge of outer.
// Requires inner to be a subset of outer, else ContractViolation.
std::vector<bool> shared_edges(const Region& outer, const Region& inner);

// Chains of inner relative to outer, ordered by their first edge. Inner
// strictly inside outer gives one chain holding every edge; inner == outer
// gives none.
std::vector<Chain> chains(const Region& outer, const Region& inner);
std::vector<Chain> chains(const ConvexPolygon& outer, const Region& inner);

// Union of the edges of all chains, as a mask over inner's edges.
std::vector<bool> chain_edge_mask(const Region& outer, const Region& inner);

}  // namespace setmax::geo
