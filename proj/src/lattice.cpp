#include "setmax/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "setmax/errors.hpp"

namespace setmax {

Lattice::Lattice(std::size_t set_count) : members_(set_count) {
  first_layer_.reserve(set_count);
  for (std::size_t i = 0; i < set_count; ++i) {
    first_layer_.push_back(insert(Label{static_cast<SetIndex>(i)}, false));
  }
}

std::optional<NodeId> Lattice::find(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId Lattice::insert(Label label, bool is_virtual) {
  if (auto existing = find(label)) return *existing;
  auto id = static_cast<NodeId>(nodes_.size());
  for (auto i : label) {
    if (i >= members_.size()) throw StructuralError("lattice label refers to a missing set");
    members_[i].push_back(id);
  }
  index_.emplace(label, id);
  nodes_.push_back(LatticeNode{std::move(label), {}, {}, {}, is_virtual});
  return id;
}

std::vector<NodeId> Lattice::ordered_ids() const {
  std::vector<NodeId> ids(nodes_.size());
  for (NodeId id = 0; id < ids.size(); ++id) ids[id] = id;
  std::sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) {
    const auto& la = nodes_[a].label;
    const auto& lb = nodes_[b].label;
    if (la.size() != lb.size()) return la.size() < lb.size();
    return la < lb;
  });
  return ids;
}

Lattice build_lattice(const SetSystem& system) {
  Lattice lattice(system.m());
  auto sigs = signatures(system);
  for (ElementIndex e = 0; e < sigs.size(); ++e) {
    if (sigs[e].empty()) continue;
    NodeId id = lattice.insert(std::move(sigs[e]), false);
    lattice.node(id).phi.push_back(e);
  }
  return lattice;
}

namespace {

std::vector<NodeId> maximal_strict_subsets(const Lattice& lattice, const Label& label,
                                           std::vector<std::uint32_t>& hits,
                                           std::vector<NodeId>& touched) {
  touched.clear();
  for (auto i : label) {
    for (auto id : lattice.nodes_containing(i)) {
      if (hits[id]++ == 0) touched.push_back(id);
    }
  }
  std::vector<NodeId> candidates;
  for (auto id : touched) {
    const auto& l = lattice.node(id).label;
    if (hits[id] == l.size() && l.size() < label.size()) candidates.push_back(id);
    hits[id] = 0;
  }
  std::sort(candidates.begin(), candidates.end(), [&](NodeId a, NodeId b) {
    const auto& la = lattice.node(a).label;
    const auto& lb = lattice.node(b).label;
    if (la.size() != lb.size()) return la.size() > lb.size();
    return la < lb;
  });
  // A candidate is immediate iff no larger candidate contains it; checking the
  // accepted ones suffices since every chain of candidates ends at one.
  std::vector<NodeId> parents;
  for (auto id : candidates) {
    const auto& l = lattice.node(id).label;
    bool shadowed = std::any_of(parents.begin(), parents.end(), [&](NodeId p) {
      return is_strict_subset(l, lattice.node(p).label);
    });
    if (!shadowed) parents.push_back(id);
  }
  std::sort(parents.begin(), parents.end(),
            [&](NodeId a, NodeId b) { return lattice.node(a).label < lattice.node(b).label; });
  return parents;
}

}  // namespace

std::vector<NodeId> maximal_strict_subsets(const Lattice& lattice, const Label& label) {
  std::vector<std::uint32_t> hits(lattice.size(), 0);
  std::vector<NodeId> touched;
  return maximal_strict_subsets(lattice, label, hits, touched);
}

void compute_parents(Lattice& lattice) {
  std::vector<std::uint32_t> hits(lattice.size(), 0);
  std::vector<NodeId> touched;
  for (NodeId id = 0; id < lattice.size(); ++id) {
    auto parents = maximal_strict_subsets(lattice, lattice.node(id).label, hits, touched);
    lattice.node(id).parents = std::move(parents);
  }
}

std::vector<NodeId> good_cover_greedy(const Lattice& lattice, NodeId node) {
  const auto& target = lattice.node(node);
  Label uncovered = target.label;
  std::vector<NodeId> chosen;
  std::vector<NodeId> pool = target.parents;
  while (!uncovered.empty()) {
    std::size_t best_gain = 0;
    std::size_t best_pos = pool.size();
    for (std::size_t t = 0; t < pool.size(); ++t) {
      std::size_t gain = overlap(lattice.node(pool[t]).label, uncovered);
      if (gain == 0) continue;
      if (gain > best_gain ||
          (gain == best_gain &&
           lattice.node(pool[t]).label < lattice.node(pool[best_pos]).label)) {
        best_gain = gain;
        best_pos = t;
      }
    }
    if (best_pos == pool.size()) {
      throw StructuralError("node " + format_label(target.label) +
                            " has an index contained in no parent");
    }
    NodeId pick = pool[best_pos];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_pos));
    chosen.push_back(pick);
    Label rest;
    const auto& covered = lattice.node(pick).label;
    std::set_difference(uncovered.begin(), uncovered.end(), covered.begin(), covered.end(),
                        std::back_inserter(rest));
    uncovered = std::move(rest);
  }
  std::sort(chosen.begin(), chosen.end(),
            [&](NodeId a, NodeId b) { return lattice.node(a).label < lattice.node(b).label; });
  return chosen;
}

std::optional<std::vector<NodeId>> good_cover_exact(const Lattice& lattice, NodeId node,
                                                    std::size_t budget) {
  const auto& target = lattice.node(node);
  const auto& parents = target.parents;
  if (parents.size() > budget) return std::nullopt;

  // Coverage of each parent as a bitmask over positions of the target label.
  const std::size_t words = (target.label.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(parents.size(),
                                                std::vector<std::uint64_t>(words, 0));
  for (std::size_t t = 0; t < parents.size(); ++t) {
    const auto& l = lattice.node(parents[t]).label;
    for (std::size_t pos = 0; pos < target.label.size(); ++pos) {
      if (std::binary_search(l.begin(), l.end(), target.label[pos])) {
        masks[t][pos / 64] |= std::uint64_t{1} << (pos % 64);
      }
    }
  }
  std::vector<std::uint64_t> full(words, ~std::uint64_t{0});
  if (target.label.size() % 64 != 0) {
    full.back() = (std::uint64_t{1} << (target.label.size() % 64)) - 1;
  }

  auto greedy = good_cover_greedy(lattice, node);
  std::size_t widest = 0;
  for (const auto& m : masks) {
    std::size_t bits = 0;
    for (auto w : m) bits += static_cast<std::size_t>(std::popcount(w));
    widest = std::max(widest, bits);
  }

  // Iterative deepening; each level branches on the parents that cover the
  // lowest uncovered position, so every cover is reached in one order only
  // per choice of that position's parent.
  std::vector<std::size_t> pick;
  std::vector<std::uint64_t> acc(words, 0);
  std::function<bool(std::size_t)> search = [&](std::size_t left) -> bool {
    std::size_t missing = 0;
    std::size_t first = target.label.size();
    for (std::size_t w = 0; w < words; ++w) {
      auto gap = full[w] & ~acc[w];
      missing += static_cast<std::size_t>(std::popcount(gap));
      if (gap != 0 && first == target.label.size()) {
        first = w * 64 + static_cast<std::size_t>(std::countr_zero(gap));
      }
    }
    if (missing == 0) return true;
    if (left == 0 || missing > left * widest) return false;
    for (std::size_t t = 0; t < parents.size(); ++t) {
      if (!(masks[t][first / 64] >> (first % 64) & 1)) continue;
      auto saved = acc;
      for (std::size_t w = 0; w < words; ++w) acc[w] |= masks[t][w];
      pick.push_back(t);
      if (search(left - 1)) return true;
      pick.pop_back();
      acc = std::move(saved);
    }
    return false;
  };
  for (std::size_t size = 1; size < greedy.size(); ++size) {
    pick.clear();
    std::fill(acc.begin(), acc.end(), 0);
    if (search(size)) {
      std::vector<NodeId> out;
      for (auto t : pick) out.push_back(parents[t]);
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return greedy;
}

std::string to_string(CoverMode mode) {
  switch (mode) {
    case CoverMode::greedy: return "greedy";
    case CoverMode::exact: return "exact";
    case CoverMode::geometric: return "geometric";
  }
  return "?";
}

CoverMode parse_cover_mode(const std::string& text) {
  if (text == "greedy") return CoverMode::greedy;
  if (text == "exact") return CoverMode::exact;
  if (text == "geometric") return CoverMode::geometric;
  throw InputError("unknown cover mode '" + text + "'");
}

CoverStats assign_covers(Lattice& lattice, CoverMode mode, std::size_t exact_budget) {
  if (mode == CoverMode::geometric) {
    throw ContractViolation("geometric covers need a geometric instance");
  }
  CoverStats stats;
  for (NodeId id = 0; id < lattice.size(); ++id) {
    auto& node = lattice.node(id);
    if (node.layer() < 2) continue;
    std::vector<NodeId> cover;
    if (mode == CoverMode::exact) {
      auto exact = good_cover_exact(lattice, id, exact_budget);
      if (exact) {
        cover = std::move(*exact);
      } else {
        ++stats.exact_budget_fallbacks;
        cover = good_cover_greedy(lattice, id);
      }
    } else {
      cover = good_cover_greedy(lattice, id);
    }
    std::sort(cover.begin(), cover.end(),
              [&](NodeId a, NodeId b) { return lattice.node(a).label < lattice.node(b).label; });
    ++stats.nodes_covered;
    stats.total_cover_size += cover.size();
    stats.max_cover_size = std::max(stats.max_cover_size, cover.size());
    lattice.node(id).good_cover = std::move(cover);
  }
  return stats;
}

std::string dump(const Lattice& lattice) {
  std::ostringstream os;
  auto list = [&](const std::vector<NodeId>& ids) {
    if (ids.empty()) return std::string("-");
    std::string s;
    for (std::size_t t = 0; t < ids.size(); ++t) {
      if (t) s += ' ';
      s += format_label(lattice.node(ids[t]).label);
    }
    return s;
  };
  for (auto id : lattice.ordered_ids()) {
    const auto& node = lattice.node(id);
    os << format_label(node.label) << " | ";
    if (node.is_virtual) {
      os << '-';
    } else {
      os << '[';
      for (std::size_t t = 0; t < node.phi.size(); ++t) {
        if (t) os << ',';
        os << node.phi[t];
      }
      os << ']';
    }
    os << " | " << list(node.parents) << " | " << list(node.good_cover) << '\n';
  }
  return os.str();
}

}  // namespace setmax
