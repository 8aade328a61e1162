#include "setmax/geometry/chains.hpp"

#include <algorithm>

#include "setmax/errors.hpp"

namespace setmax::geo {

std::vector<bool> shared_edges(const Region& outer, const Region& inner) {
  if (!contains(outer, inner)) throw ContractViolation("chains: inner region is not inside outer");
  std::vector<bool> shared(inner.size(), false);
  // Inside a convex outer region, an inner edge on an outer supporting line
  // lies within that outer edge, so line equality decides it.
  for (std::size_t t = 0; t < inner.size(); ++t) {
    const auto& l = inner.lines()[t];
    shared[t] = std::find(outer.lines().begin(), outer.lines().end(), l) != outer.lines().end();
  }
  return shared;
}

std::vector<Chain> chains(const Region& outer, const Region& inner) {
  auto shared = shared_edges(outer, inner);
  const std::size_t s = shared.size();
  std::vector<Chain> out;
  if (s == 0) return out;
  auto first_shared = std::find(shared.begin(), shared.end(), true);
  if (first_shared == shared.end()) {
    Chain all;
    for (std::size_t t = 0; t < s; ++t) all.edges.push_back(t);
    out.push_back(std::move(all));
    return out;
  }
  std::size_t start = static_cast<std::size_t>(first_shared - shared.begin());
  Chain current;
  for (std::size_t step = 1; step <= s; ++step) {
    std::size_t t = (start + step) % s;
    if (shared[t]) {
      if (!current.edges.empty()) out.push_back(std::move(current));
      current = {};
    } else {
      current.edges.push_back(t);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Chain& a, const Chain& b) { return a.edges.front() < b.edges.front(); });
  return out;
}

std::vector<Chain> chains(const ConvexPolygon& outer, const Region& inner) {
  return chains(Region::from_polygon(outer), inner);
}

std::vector<bool> chain_edge_mask(const Region& outer, const Region& inner) {
  auto shared = shared_edges(outer, inner);
  for (std::size_t t = 0; t < shared.size(); ++t) shared[t] = !shared[t];
  return shared;
}

}  // namespace setmax::geo
