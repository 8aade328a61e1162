#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "setmax/set_system.hpp"

namespace setmax {

using NodeId = std::uint32_t;

/// One node of the sparse intersection lattice. phi holds the elements whose
/// signature is exactly this label; parents are the immediate strict-subset
/// nodes and good_cover is the subset of them propagation actually uses.
struct LatticeNode {
  Label label;
  std::vector<ElementIndex> phi;
  std::vector<NodeId> parents;
  std::vector<NodeId> good_cover;
  bool is_virtual = false;

  std::size_t layer() const { return label.size(); }
};

class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t set_count);

  std::size_t set_count() const { return first_layer_.size(); }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<LatticeNode>& nodes() const { return nodes_; }
  const LatticeNode& node(NodeId id) const { return nodes_[id]; }
  LatticeNode& node(NodeId id) { return nodes_[id]; }
  NodeId first_layer(SetIndex i) const { return first_layer_[i]; }
  std::optional<NodeId> find(const Label& label) const;

  // Adds a node or returns the existing one with that label.
  NodeId insert(Label label, bool is_virtual);

  // Nodes containing set i, in insertion order.
  const std::vector<NodeId>& nodes_containing(SetIndex i) const { return members_[i]; }

  // Node ids ordered by (layer, label); the order dumps and tests use.
  std::vector<NodeId> ordered_ids() const;

 private:
  std::vector<LatticeNode> nodes_;
  std::unordered_map<Label, NodeId, LabelHash> index_;
  std::vector<std::vector<NodeId>> members_;
  std::vector<NodeId> first_layer_;
};

// One node per distinct non-empty signature plus every singleton. Performs
// no key comparisons; the system must be valid.
Lattice build_lattice(const SetSystem& system);

// Maximal lattice nodes whose label is a strict subset of label, sorted by label.
std::vector<NodeId> maximal_strict_subsets(const Lattice& lattice, const Label& label);

void compute_parents(Lattice& lattice);

// Greedy set cover of the node's label by its parents: largest marginal
// coverage first, ties to the lexicographically smallest label. Result sorted
// by label. Throws StructuralError if some index is in no parent.
std::vector<NodeId> good_cover_greedy(const Lattice& lattice, NodeId node);

inline constexpr std::size_t kDefaultExactBudget = 20;

// Minimum-cardinality good cover by exhaustive search over parent subsets of
// increasing size. nullopt when the node has more than budget parents.
std::optional<std::vector<NodeId>> good_cover_exact(const Lattice& lattice, NodeId node,
                                                    std::size_t budget = kDefaultExactBudget);

enum class CoverMode { greedy, exact, geometric };

std::string to_string(CoverMode mode);
CoverMode parse_cover_mode(const std::string& text);

struct CoverStats {
  std::size_t nodes_covered = 0;
  std::size_t total_cover_size = 0;
  std::size_t max_cover_size = 0;
  std::size_t exact_budget_fallbacks = 0;
};

// Fills good_cover for every node at layer >= 2 using greedy or exact covers.
CoverStats assign_covers(Lattice& lattice, CoverMode mode,
                         std::size_t exact_budget = kDefaultExactBudget);

// Text dump, one node per line, layers ascending then by label:
//   {1,2} | [1] | {1} {2} | {1} {2}
// Labels number sets from 1; phi lists 0-based element indices; virtual
// nodes print "-" for phi.
std::string dump(const Lattice& lattice);

}  // namespace setmax
