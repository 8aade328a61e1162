#include "setmax/solvers.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "setmax/errors.hpp"

namespace setmax {

namespace {
constexpr ElementIndex kNone = std::numeric_limits<ElementIndex>::max();

void check_keys(const SetSystem& system, const KeySpace& keys) {
  if (keys.size() != system.n()) {
    throw InputError("key count " + std::to_string(keys.size()) + " does not match n = " +
                     std::to_string(system.n()));
  }
}
}  // namespace

std::string to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::lattice: return "lattice";
    case Algorithm::sort: return "sort";
    case Algorithm::bucket: return "bucket";
    case Algorithm::brute: return "brute";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& text) {
  if (text == "lattice") return Algorithm::lattice;
  if (text == "sort") return Algorithm::sort;
  if (text == "bucket") return Algorithm::bucket;
  if (text == "brute") return Algorithm::brute;
  throw InputError("unknown algorithm '" + text + "'");
}

std::uint64_t sort_bound(std::size_t n) {
  if (n <= 1) return 0;
  std::uint64_t ceil_log = 0;
  while ((std::uint64_t{1} << ceil_log) < n) ++ceil_log;
  return n * ceil_log;
}

MaximaResult propagate(const Lattice& lattice, const KeySpace& keys,
                       const LatticeSolveOptions& options) {
  MaximaResult result;
  result.algorithm = Algorithm::lattice;
  ComparisonLedger ledger(options.record_transcript);

  // Deepest layer first, then by label.
  auto order = lattice.ordered_ids();
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return lattice.node(a).layer() > lattice.node(b).layer();
  });

  std::vector<ElementIndex> champion(lattice.size(), kNone);
  std::size_t covered_elements = 0;
  for (NodeId id = 0; id < lattice.size(); ++id) {
    const auto& node = lattice.node(id);
    result.total_cover_size += node.good_cover.size();
    if (node.is_virtual || node.phi.empty()) continue;
    covered_elements += node.phi.size();
    champion[id] = max_of_class(node.phi, keys, ledger);
  }

  // Max over the phi of every node that reaches a node along cover edges.
  std::vector<ElementIndex> expected;
  if (options.check_invariant) {
    expected.assign(lattice.size(), kNone);
    std::vector<std::int64_t> best(lattice.size(), std::numeric_limits<std::int64_t>::min());
    std::vector<char> seen(lattice.size());
    std::vector<NodeId> stack;
    for (NodeId z = 0; z < lattice.size(); ++z) {
      const auto& nz = lattice.node(z);
      if (nz.is_virtual || nz.phi.empty()) continue;
      ElementIndex top = nz.phi[0];
      for (auto e : nz.phi) {
        if (oracle::raw_key(keys, e) > oracle::raw_key(keys, top)) top = e;
      }
      auto key = oracle::raw_key(keys, top);
      std::fill(seen.begin(), seen.end(), 0);
      stack.assign(1, z);
      seen[z] = 1;
      while (!stack.empty()) {
        NodeId a = stack.back();
        stack.pop_back();
        if (key > best[a]) {
          best[a] = key;
          expected[a] = top;
        }
        for (auto b : lattice.node(a).good_cover) {
          if (!seen[b]) {
            seen[b] = 1;
            stack.push_back(b);
          }
        }
      }
    }
  }
  auto check_layers_from = [&](std::size_t layer) {
    for (NodeId id = 0; id < lattice.size(); ++id) {
      if (lattice.node(id).layer() >= layer && champion[id] != expected[id]) {
        throw StructuralError("propagation invariant broken at node " +
                              format_label(lattice.node(id).label));
      }
    }
  };

  for (std::size_t t = 0; t < order.size(); ++t) {
    NodeId id = order[t];
    const auto& node = lattice.node(id);
    if (champion[id] != kNone) {
      for (auto parent : node.good_cover) {
        // The same element can reach a node along two paths.
        if (champion[parent] == kNone || champion[parent] == champion[id]) {
          champion[parent] = champion[id];
        } else if (keys.compare(champion[id], champion[parent], ledger) == Ordering::greater) {
          champion[parent] = champion[id];
        }
      }
    }
    bool layer_done = t + 1 == order.size() ||
                      lattice.node(order[t + 1]).layer() != node.layer();
    if (options.check_invariant && layer_done) check_layers_from(node.layer());
  }

  result.maxima.resize(lattice.set_count());
  for (SetIndex i = 0; i < lattice.set_count(); ++i) {
    auto c = champion[lattice.first_layer(i)];
    if (c == kNone) throw StructuralError("set " + std::to_string(i + 1) + " received no maximum");
    result.maxima[i] = c;
  }
  result.comparisons = ledger.count();
  result.bound = covered_elements + result.total_cover_size;
  result.transcript = ledger.transcript();
  return result;
}

MaximaResult solve_lattice(const SetSystem& system, const KeySpace& keys,
                           const LatticeSolveOptions& options) {
  require_valid(system);
  check_keys(system, keys);
  auto reads_before = oracle::access_count();
  auto lattice = build_lattice(system);
  compute_parents(lattice);
  auto stats = assign_covers(lattice, options.cover, options.exact_budget);
  auto construction_reads = oracle::access_count() - reads_before;

  auto result = propagate(lattice, keys, options);
  result.construction_oracle_reads = construction_reads;
  result.cover_fallbacks = stats.exact_budget_fallbacks;
  return result;
}

namespace {

void merge_sort_range(std::vector<ElementIndex>& a, std::vector<ElementIndex>& buf,
                      std::size_t lo, std::size_t hi, const KeySpace& keys,
                      ComparisonLedger& ledger) {
  if (hi - lo < 2) return;
  std::size_t mid = lo + (hi - lo) / 2;
  merge_sort_range(a, buf, lo, mid, keys, ledger);
  merge_sort_range(a, buf, mid, hi, keys, ledger);
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (keys.compare(a[i], a[j], ledger) == Ordering::greater) {
      buf[out++] = a[i++];
    } else {
      buf[out++] = a[j++];
    }
  }
  while (i < mid) buf[out++] = a[i++];
  while (j < hi) buf[out++] = a[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
            buf.begin() + static_cast<std::ptrdiff_t>(hi),
            a.begin() + static_cast<std::ptrdiff_t>(lo));
}

}  // namespace

std::vector<ElementIndex> merge_sort_descending(std::size_t n, const KeySpace& keys,
                                                ComparisonLedger& ledger) {
  std::vector<ElementIndex> order(n);
  for (ElementIndex e = 0; e < n; ++e) order[e] = e;
  std::vector<ElementIndex> buf(n);
  merge_sort_range(order, buf, 0, n, keys, ledger);
  return order;
}

MaximaResult solve_sort(const SetSystem& system, const KeySpace& keys) {
  require_valid(system);
  check_keys(system, keys);
  MaximaResult result;
  result.algorithm = Algorithm::sort;
  ComparisonLedger ledger;
  auto sigs = signatures(system);
  auto order = merge_sort_descending(system.n(), keys, ledger);
  result.maxima.assign(system.m(), kNone);
  std::size_t assigned = 0;
  for (auto e : order) {
    if (assigned == system.m()) break;
    for (auto i : sigs[e]) {
      if (result.maxima[i] == kNone) {
        result.maxima[i] = e;
        ++assigned;
      }
    }
  }
  result.comparisons = ledger.count();
  result.bound = sort_bound(system.n());
  return result;
}

MaximaResult solve_bucket(const SetSystem& system, const KeySpace& keys) {
  require_valid(system);
  check_keys(system, keys);
  MaximaResult result;
  result.algorithm = Algorithm::bucket;
  ComparisonLedger ledger;

  auto reads_before = oracle::access_count();
  auto sigs = signatures(system);
  std::unordered_map<Label, std::size_t, LabelHash> bucket_of;
  std::vector<std::vector<ElementIndex>> buckets;
  std::vector<const Label*> bucket_label;
  for (ElementIndex e = 0; e < sigs.size(); ++e) {
    if (sigs[e].empty()) continue;
    auto [it, inserted] = bucket_of.emplace(sigs[e], buckets.size());
    if (inserted) {
      buckets.emplace_back();
      bucket_label.push_back(&it->first);
    }
    buckets[it->second].push_back(e);
  }
  // Buckets meeting each set, in bucket creation order.
  std::vector<std::vector<std::size_t>> meeting(system.m());
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    for (auto i : *bucket_label[b]) meeting[i].push_back(b);
  }
  result.construction_oracle_reads = oracle::access_count() - reads_before;
  result.construction_comparisons = ledger.count();

  std::uint64_t closed_form = 0;
  std::vector<ElementIndex> bucket_max(buckets.size());
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    bucket_max[b] = max_of_class(buckets[b], keys, ledger);
    closed_form += buckets[b].size() - 1;
  }
  result.maxima.resize(system.m());
  std::vector<ElementIndex> champions;
  for (std::size_t i = 0; i < system.m(); ++i) {
    champions.clear();
    for (auto b : meeting[i]) champions.push_back(bucket_max[b]);
    result.maxima[i] = max_of_class(champions, keys, ledger);
    closed_form += champions.size() - 1;
  }
  result.comparisons = ledger.count();
  result.bound = closed_form;
  return result;
}

MaximaResult solve_bruteforce(const SetSystem& system, const KeySpace& keys) {
  require_valid(system);
  check_keys(system, keys);
  MaximaResult result;
  result.algorithm = Algorithm::brute;
  result.maxima.resize(system.m());
  for (std::size_t i = 0; i < system.m(); ++i) {
    const auto& s = system.set(static_cast<SetIndex>(i));
    ElementIndex best = s.front();
    auto best_key = oracle::raw_key(keys, best);
    for (auto e : s) {
      auto k = oracle::raw_key(keys, e);
      if (k > best_key) {
        best_key = k;
        best = e;
      }
    }
    result.maxima[i] = best;
    result.comparisons += s.size() - 1;
  }
  result.bound = result.comparisons;
  return result;
}

}  // namespace setmax
