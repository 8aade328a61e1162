#include "setmax/harness/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "setmax/errors.hpp"
#include "setmax/geometry/instance.hpp"

namespace setmax::harness {

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << to_string(r.algorithm) << ": comparisons=" << r.comparisons << " bound=" << r.bound << '\n';
  }
  if (!cover_sizes.empty()) {
    os << "covers:";
    for (const auto& [label, size] : cover_sizes) os << ' ' << label << '=' << size;
    os << '\n';
  }
  for (const auto& c : checks) {
    os << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
  }
  os << (ok() ? "verification passed" : "verification FAILED") << '\n';
  return os.str();
}

namespace {

// Same relative order, different values.
KeySpace remap_keys(const KeySpace& keys, std::uint64_t seed) {
  std::vector<std::int64_t> raw(keys.size());
  for (ElementIndex e = 0; e < keys.size(); ++e) raw[e] = oracle::raw_key(keys, e);
  std::vector<std::int64_t> sorted = raw;
  std::sort(sorted.begin(), sorted.end());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> gap(1, 1000);
  std::vector<std::int64_t> fresh(sorted.size());
  std::int64_t v = -500000;
  for (auto& f : fresh) f = (v += gap(rng));
  for (auto& r : raw) {
    r = fresh[static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), r) - sorted.begin())];
  }
  return KeySpace(std::move(raw));
}

}  // namespace

VerifyReport verify(const InstanceFile& inst, std::uint64_t seed) {
  VerifyReport report;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  auto violations = validate(inst.system);
  add("set system valid", violations.empty(), violations.empty() ? "" : violations.front().message);
  if (!violations.empty()) return report;

  KeySpace keys = inst.keys ? KeySpace(*inst.keys) : KeySpace::random_permutation(inst.system.n(), seed);

  if (inst.geometry) {
    auto induced = geo::induced_system(*inst.geometry);
    add("sets match polygon containment", induced == inst.system);
  }

  LatticeSolveOptions opts;
  opts.record_transcript = true;
  opts.check_invariant = inst.system.n() <= 5000;
  MaximaResult lattice_result;
  geo::GeometricStats gstats;
  try {
    if (inst.geometry) {
      opts.cover = CoverMode::geometric;
      auto g = geo::build_geometric_instance(*inst.geometry);
      geo::assign_geometric_covers(g);
      for (auto id : g.lattice.ordered_ids()) {
        const auto& node = g.lattice.node(id);
        if (node.layer() >= 2) report.cover_sizes.emplace_back(format_label(node.label), node.good_cover.size());
      }
      auto solved = geo::solve_geometric(*inst.geometry, keys, opts);
      lattice_result = std::move(solved.result);
      gstats = solved.stats;
    } else {
      auto lattice = build_lattice(inst.system);
      compute_parents(lattice);
      assign_covers(lattice, CoverMode::greedy);
      for (auto id : lattice.ordered_ids()) {
        const auto& node = lattice.node(id);
        if (node.layer() >= 2) report.cover_sizes.emplace_back(format_label(node.label), node.good_cover.size());
      }
      lattice_result = solve_lattice(inst.system, keys, opts);
    }
    add("propagation invariant", true, opts.check_invariant ? "checked per layer" : "skipped for large n");
  } catch (const StructuralError& e) {
    add("propagation invariant", false, e.what());
    return report;
  }

  auto sort_result = solve_sort(inst.system, keys);
  auto bucket_result = solve_bucket(inst.system, keys);
  auto brute_result = solve_bruteforce(inst.system, keys);

  add("lattice maxima match oracle", lattice_result.maxima == brute_result.maxima);
  add("sort maxima match oracle", sort_result.maxima == brute_result.maxima);
  add("bucket maxima match oracle", bucket_result.maxima == brute_result.maxima);
  add("lattice within n + sum|cover|",
      lattice_result.comparisons <= inst.system.n() + lattice_result.total_cover_size,
      std::to_string(lattice_result.comparisons) + " <= " +
          std::to_string(inst.system.n() + lattice_result.total_cover_size));
  add("sort within n ceil(log2 n)", sort_result.comparisons <= sort_bound(inst.system.n()),
      std::to_string(sort_result.comparisons) + " <= " + std::to_string(sort_bound(inst.system.n())));
  add("bucket equals closed form", bucket_result.comparisons == bucket_result.bound);
  add("construction used no comparisons",
      lattice_result.construction_comparisons == 0 && lattice_result.construction_oracle_reads == 0 &&
          bucket_result.construction_oracle_reads == 0);

  // Order-preserving remap must leave the lattice transcript unchanged.
  auto remapped = remap_keys(keys, seed ^ 0x5eedULL);
  MaximaResult again = inst.geometry ? geo::solve_geometric(*inst.geometry, remapped, opts).result
                                     : solve_lattice(inst.system, remapped, opts);
  add("oblivious transcript", again.transcript == lattice_result.transcript);

  if (inst.geometry) {
    const auto k = inst.geometry->k;
    add("every geometric cover has at most k members", gstats.oversized_covers == 0,
        "max " + std::to_string(gstats.max_cover_size) + ", k = " + std::to_string(k));
    // Zero-area nodes always fall back; anything beyond them is a failure.
    add("no greedy fallbacks outside zero-area nodes", gstats.fallbacks <= gstats.degenerate_regions,
        gstats.warnings.empty() ? std::to_string(gstats.fallbacks) : gstats.warnings.front());
    add("cover chains pairwise disjoint", gstats.chain_overlaps == 0,
        std::to_string(gstats.chain_overlaps) + " overlaps");
  }
  report.results = {lattice_result, sort_result, bucket_result, brute_result};
  return report;
}

}  // namespace setmax::harness
