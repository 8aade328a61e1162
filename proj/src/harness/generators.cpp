#include "setmax/harness/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "setmax/errors.hpp"
#include "setmax/kernels.hpp"

namespace setmax::harness {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 over the pair
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SetSystem gen_random_system(std::size_t n, std::size_t m, double density, std::uint64_t seed) {
  if (!(density > 0.0 && density <= 1.0)) throw InputError("density must lie in (0, 1]");
  if (n < 63 && m > (std::uint64_t{1} << n) - 1) {
    throw InputError("cannot draw " + std::to_string(m) + " distinct non-empty sets over " +
                     std::to_string(n) + " elements");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution join(density);
  std::set<std::vector<ElementIndex>> seen;
  std::vector<std::vector<ElementIndex>> sets;
  constexpr int kRetries = 1000;
  for (std::size_t i = 0; i < m; ++i) {
    bool done = false;
    for (int attempt = 0; attempt < kRetries && !done; ++attempt) {
      std::vector<ElementIndex> s;
      for (ElementIndex e = 0; e < n; ++e) {
        if (join(rng)) s.push_back(e);
      }
      if (s.empty() || !seen.insert(s).second) continue;
      sets.push_back(std::move(s));
      done = true;
    }
    if (!done) {
      throw GenerationError("could not draw set " + std::to_string(i + 1) + " distinct from the others");
    }
  }
  return SetSystem(n, std::move(sets));
}

namespace {

geo::ConvexPolygon random_polygon(std::mt19937_64& rng, std::size_t m, std::size_t k,
                                  const ConvexGenOptions& options) {
  const double box = 2.0 * double(options.half_box);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Each polygon's disc lies inside the point box, so the mean number of
  // discs over a point is m * pi * r^2 / box^2 at every scale. The radius
  // is capped so a disc of 1.5 times the mean still fits.
  const double base_r =
      std::min(double(options.half_box) / 1.5, box * std::sqrt(options.depth / (std::numbers::pi * double(m))));
  while (true) {
    double r = std::max(8.0, base_r * (0.5 + unit(rng)));
    const auto reach = static_cast<std::int64_t>(std::ceil(r));
    std::uniform_int_distribution<std::int64_t> center_coord(-options.half_box + reach,
                                                             options.half_box - reach);
    geo::Point2 center{center_coord(rng), center_coord(rng)};
    std::vector<geo::Point2> cloud;
    for (std::size_t t = 0; t < 3 * k; ++t) {
      double rho = r * std::sqrt(unit(rng));
      double theta = 2.0 * std::numbers::pi * unit(rng);
      geo::Point2 p{center.x + std::llround(rho * std::cos(theta)),
                    center.y + std::llround(rho * std::sin(theta))};
      cloud.push_back(p);
    }
    auto hull = geo::convex_hull(std::move(cloud));
    if (hull.size() < 3) continue;
    if (hull.size() > k) {
      std::vector<std::size_t> keep(hull.size());
      for (std::size_t t = 0; t < keep.size(); ++t) keep[t] = t;
      std::shuffle(keep.begin(), keep.end(), rng);
      keep.resize(k);
      std::sort(keep.begin(), keep.end());
      std::vector<geo::Point2> sub;
      for (auto t : keep) sub.push_back(hull[t]);
      hull = std::move(sub);
    }
    return geo::ConvexPolygon::from_vertices(std::move(hull));
  }
}

}  // namespace

geo::GeometricInstance gen_convex_instance(std::size_t n, std::size_t m, std::size_t k,
                                           std::uint64_t seed, const ConvexGenOptions& options) {
  if (k < 3) throw InputError("k must be at least 3");
  if (n == 0) throw InputError("n must be positive");
  if (options.half_box <= 0 || options.half_box > geo::kCoordLimit / 2) {
    throw InputError("half_box must lie in (0, 2^19]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-options.half_box, options.half_box);

  geo::GeometricInstance inst;
  inst.k = k;
  std::set<geo::Point2> used;
  while (inst.points.size() < n) {
    geo::Point2 p{coord(rng), coord(rng)};
    if (used.insert(p).second) inst.points.push_back(p);
  }
  inst.polygons.reserve(m);
  for (std::size_t j = 0; j < m; ++j) inst.polygons.push_back(random_polygon(rng, m, k, options));

  // Redraw polygons that catch no point or repeat an earlier point set.
  constexpr int kRounds = 200;
  for (int round = 0;; ++round) {
    auto members = kernels::containment(inst.points, inst.polygons);
    std::set<std::vector<ElementIndex>> seen;
    std::vector<std::size_t> redo;
    for (std::size_t j = 0; j < m; ++j) {
      if (members[j].empty() || !seen.insert(members[j]).second) redo.push_back(j);
    }
    if (redo.empty()) break;
    if (round == kRounds) {
      throw GenerationError("could not place " + std::to_string(m) +
                            " polygons with distinct non-empty point sets");
    }
    for (auto j : redo) inst.polygons[j] = random_polygon(rng, m, k, options);
  }
  return inst;
}

}  // namespace setmax::harness
