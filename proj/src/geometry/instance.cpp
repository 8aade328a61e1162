#include "setmax/geometry/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "setmax/errors.hpp"
#include "setmax/geometry/chains.hpp"
#include "setmax/kernels.hpp"

namespace setmax::geo {

void validate_instance(const GeometricInstance& inst) {
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    if (!in_coordinate_range(inst.points[i])) {
      throw InputError("point " + std::to_string(i) + " exceeds the coordinate limit");
    }
  }
  for (std::size_t j = 0; j < inst.polygons.size(); ++j) {
    if (inst.polygons[j].sides() > inst.k) {
      throw InputError("polygon " + std::to_string(j + 1) + " has " +
                       std::to_string(inst.polygons[j].sides()) + " sides, more than k = " +
                       std::to_string(inst.k));
    }
  }
}

std::size_t max_sides(const GeometricInstance& inst) {
  std::size_t k = 0;
  for (const auto& p : inst.polygons) k = std::max(k, p.sides());
  return k;
}

SetSystem induced_system(const GeometricInstance& inst) {
  return SetSystem(inst.points.size(), kernels::containment(inst.points, inst.polygons));
}

Region label_region(const GeometricLattice& g, const Label& label) {
  std::vector<const Region*> parts;
  parts.reserve(label.size());
  for (auto i : label) parts.push_back(&g.polygon_regions[i]);
  return intersect_all(parts);
}

GeometricLattice build_geometric_instance(const GeometricInstance& inst) {
  validate_instance(inst);
  GeometricLattice g;
  g.k = inst.k;
  g.system = induced_system(inst);
  require_valid(g.system);
  g.lattice = build_lattice(g.system);
  compute_parents(g.lattice);
  g.polygon_regions.reserve(inst.polygons.size());
  for (const auto& p : inst.polygons) g.polygon_regions.push_back(Region::from_polygon(p));

  std::vector<Label> labels;
  labels.reserve(g.lattice.size());
  for (const auto& node : g.lattice.nodes()) labels.push_back(node.label);
  g.regions = kernels::label_regions(g, labels);

  for (NodeId id = 0; id < g.lattice.size(); ++id) {
    const auto& node = g.lattice.node(id);
    if (node.layer() < 2 || !g.regions[id].empty()) continue;
    // A zero-area intersection is legitimate only when its points touch a
    // polygon boundary; a point strictly inside every polygon means the
    // clipping lost area it should have kept.
    Point2 witness = inst.points[node.phi.front()];
    bool strictly_inside = std::all_of(node.label.begin(), node.label.end(), [&](SetIndex i) {
      return point_in_convex(inst.polygons[i], witness) == Containment::inside;
    });
    if (strictly_inside) {
      throw StructuralError("node " + format_label(node.label) +
                            " has points but an empty intersection region");
    }
    ++g.stats.degenerate_regions;
  }
  return g;
}

namespace {

GeometricCover fail(GeometricCover cover, std::string reason) {
  cover.fallback = true;
  cover.reason = std::move(reason);
  cover.labels.clear();
  cover.regions.clear();
  return cover;
}

bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
  const std::size_t r = pick.size();
  std::size_t t = r;
  while (t > 0 && pick[t - 1] == n - r + (t - 1)) --t;
  if (t == 0) return false;
  ++pick[t - 1];
  for (std::size_t u = t; u < r; ++u) pick[u] = pick[u - 1] + 1;
  return true;
}

constexpr std::size_t kHittingSetAttempts = 20000;

}  // namespace

GeometricCover geometric_cover(const GeometricLattice& g, const Label& label,
                               const Region& region) {
  GeometricCover cover;
  if (label.size() < 2) return fail(std::move(cover), "first-layer node");
  if (region.empty()) return fail(std::move(cover), "zero-area region " + format_label(label));

  const std::size_t edges = region.size();
  const std::size_t k = std::max<std::size_t>(g.k, 1);

  // on_boundary[a][e]: edge e of the region lies on polygon label[a]'s boundary.
  std::vector<std::vector<bool>> on_boundary;
  on_boundary.reserve(label.size());
  std::vector<std::size_t> must_hit;
  std::vector<SetIndex> nested;
  for (std::size_t a = 0; a < label.size(); ++a) {
    on_boundary.push_back(shared_edges(g.polygon_regions[label[a]], region));
    const auto& b = on_boundary.back();
    if (std::all_of(b.begin(), b.end(), [](bool v) { return v; })) {
      nested.push_back(label[a]);
    } else {
      must_hit.push_back(a);
    }
  }
  cover.nested = !nested.empty();

  auto hits_all = [&](const std::vector<std::size_t>& chosen) {
    return std::all_of(must_hit.begin(), must_hit.end(), [&](std::size_t a) {
      return std::any_of(chosen.begin(), chosen.end(),
                         [&](std::size_t e) { return !on_boundary[a][e]; });
    });
  };

  std::vector<std::size_t> chosen(std::min(edges, k));
  for (std::size_t t = 0; t < chosen.size(); ++t) chosen[t] = t;
  std::size_t attempts = 0;
  while (!hits_all(chosen)) {
    cover.shifted = true;
    if (++attempts > kHittingSetAttempts || !next_combination(chosen, edges)) {
      return fail(std::move(cover), "no hitting edge set of size " + std::to_string(chosen.size()) +
                                        " for " + format_label(label));
    }
  }

  std::vector<Label> candidates;
  for (auto e : chosen) {
    Label le;
    for (std::size_t a = 0; a < label.size(); ++a) {
      if (!on_boundary[a][e]) le.push_back(label[a]);
    }
    if (!le.empty()) candidates.push_back(std::move(le));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::unordered_map<Label, Region, LabelHash> region_cache;
  auto region_of = [&](const Label& l) -> const Region& {
    auto it = region_cache.find(l);
    if (it == region_cache.end()) it = region_cache.emplace(l, label_region(g, l)).first;
    return it->second;
  };

  // Merge any pair whose joint region still exceeds the node region.
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t a = 0; a < candidates.size() && !merged; ++a) {
      for (std::size_t b = a + 1; b < candidates.size() && !merged; ++b) {
        Label joint = label_union(candidates[a], candidates[b]);
        auto it = region_cache.find(joint);
        if (it == region_cache.end()) {
          // Q of a union is the intersection of the two Q's.
          auto r = convex_intersection(region_of(candidates[a]), region_of(candidates[b]));
          it = region_cache.emplace(joint, std::move(r)).first;
        }
        if (!(it->second == region)) {
          candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(b));
          candidates[a] = std::move(joint);
          std::sort(candidates.begin(), candidates.end());
          candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
          merged = true;
        }
      }
    }
  }
  for (auto i : nested) candidates.push_back(Label{i});
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  Label covered;
  for (const auto& c : candidates) {
    if (!is_strict_subset(c, label)) {
      return fail(std::move(cover), "candidate " + format_label(c) + " is not a strict subset of " +
                                        format_label(label));
    }
    covered = label_union(covered, c);
  }
  if (covered != label) return fail(std::move(cover), "candidates miss part of " + format_label(label));

  cover.labels = std::move(candidates);
  for (const auto& c : cover.labels) cover.regions.push_back(region_of(c));

  // Chains of distinct cover members relative to the node must be edge-disjoint.
  std::vector<std::vector<bool>> masks;
  for (const auto& r : cover.regions) masks.push_back(chain_edge_mask(r, region));
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = a + 1; b < masks.size(); ++b) {
      for (std::size_t e = 0; e < edges; ++e) {
        if (masks[a][e] && masks[b][e]) {
          ++cover.chain_overlaps;
          break;
        }
      }
    }
  }
  return cover;
}

void assign_geometric_covers(GeometricLattice& g) {
  auto& lattice = g.lattice;
  auto& stats = g.stats;
  std::vector<NodeId> pending;
  for (NodeId id = 0; id < lattice.size(); ++id) {
    if (lattice.node(id).layer() >= 2) pending.push_back(id);
  }
  auto by_label = [&](NodeId a, NodeId b) { return lattice.node(a).label < lattice.node(b).label; };
  auto greedy_fallback = [&](NodeId id, const std::string& reason) {
    ++stats.fallbacks;
    if (stats.warnings.size() < 16) stats.warnings.push_back(reason);
    if (lattice.node(id).parents.empty()) {
      lattice.node(id).parents = maximal_strict_subsets(lattice, lattice.node(id).label);
    }
    return good_cover_greedy(lattice, id);
  };

  // Labels shrink strictly from wave to wave, so m waves always suffice.
  while (!pending.empty()) {
    ++stats.waves;
    std::vector<NodeId> next;
    if (stats.waves > lattice.set_count()) {
      for (auto id : pending) {
        auto ids = greedy_fallback(id, "wave limit reached at " + format_label(lattice.node(id).label));
        std::sort(ids.begin(), ids.end(), by_label);
        lattice.node(id).good_cover = std::move(ids);
      }
      break;
    }
    auto covers = kernels::geometric_covers(g, pending);
    for (std::size_t t = 0; t < pending.size(); ++t) {
      NodeId id = pending[t];
      auto& cover = covers[t];
      std::vector<NodeId> ids;
      if (cover.fallback) {
        ids = greedy_fallback(id, cover.reason);
      } else {
        stats.nested_nodes += cover.nested ? 1 : 0;
        stats.shifted_hitting_sets += cover.shifted ? 1 : 0;
        stats.chain_overlaps += cover.chain_overlaps;
        for (std::size_t c = 0; c < cover.labels.size(); ++c) {
          auto found = lattice.find(cover.labels[c]);
          NodeId cid;
          if (found) {
            cid = *found;
          } else {
            cid = lattice.insert(cover.labels[c], true);
            g.regions.push_back(std::move(cover.regions[c]));
            ++stats.virtual_nodes;
            next.push_back(cid);
          }
          ids.push_back(cid);
        }
      }
      std::sort(ids.begin(), ids.end(), by_label);
      ++stats.nodes_covered;
      stats.total_cover_size += ids.size();
      stats.max_cover_size = std::max(stats.max_cover_size, ids.size());
      if (ids.size() > g.k) ++stats.oversized_covers;
      lattice.node(id).good_cover = std::move(ids);
    }
    pending = std::move(next);
  }
}

GeometricSolve solve_geometric(const GeometricInstance& inst, const KeySpace& keys,
                               const LatticeSolveOptions& options) {
  if (keys.size() != inst.points.size()) throw InputError("key count does not match point count");
  auto reads_before = oracle::access_count();
  auto g = build_geometric_instance(inst);
  std::size_t budget_fallbacks = 0;
  if (options.cover == CoverMode::geometric) {
    assign_geometric_covers(g);
  } else {
    budget_fallbacks = assign_covers(g.lattice, options.cover, options.exact_budget).exact_budget_fallbacks;
  }
  auto construction_reads = oracle::access_count() - reads_before;

  GeometricSolve out;
  out.result = propagate(g.lattice, keys, options);
  out.result.construction_oracle_reads = construction_reads;
  out.result.cover_fallbacks = options.cover == CoverMode::geometric ? g.stats.fallbacks : budget_fallbacks;
  out.stats = std::move(g.stats);
  out.lattice_nodes = g.lattice.size();
  return out;
}

GeometricInstance circle_embedding(const SetSystem& system) {
  require_valid(system);
  constexpr double kRadius = double(std::int64_t{1} << 18);
  const std::size_t n = system.n();
  std::vector<double> radius(n, kRadius);
  std::vector<Point2> pts(n);
  auto place = [&](std::size_t t) {
    double theta = 2.0 * std::numbers::pi * double(t) / double(std::max<std::size_t>(n, 1));
    pts[t] = {std::llround(radius[t] * std::cos(theta)), std::llround(radius[t] * std::sin(theta))};
  };
  for (std::size_t t = 0; t < n; ++t) place(t);
  // Snapping can flatten a vertex; push offenders outward until every
  // consecutive triple turns strictly left.
  if (n >= 3) {
    for (int round = 0; round < 256; ++round) {
      bool bad = false;
      for (std::size_t t = 0; t < n; ++t) {
        if (orientation(pts[(t + n - 1) % n], pts[t], pts[(t + 1) % n]) <= 0) {
          radius[t] += 1.0;
          place(t);
          bad = true;
        }
      }
      if (!bad) break;
    }
    if (!is_strictly_convex_ccw(pts)) {
      throw GenerationError("circle embedding could not reach strictly convex position for n = " +
                            std::to_string(n));
    }
  }
  GeometricInstance inst;
  inst.points = pts;
  for (const auto& s : system.sets()) {
    std::vector<Point2> corners;
    corners.reserve(s.size());
    for (auto e : s) corners.push_back(pts[e]);
    inst.polygons.push_back(ConvexPolygon::from_vertices(std::move(corners)));
  }
  inst.k = max_sides(inst);
  return inst;
}

}  // namespace setmax::geo
