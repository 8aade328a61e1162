#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "setmax/order.hpp"

namespace setmax {

using SetIndex = std::uint32_t;

// An index set over the sets of a system, strictly ascending. Ordering between
// labels is plain lexicographic comparison of the index sequences.
using Label = std::vector<SetIndex>;

struct LabelHash {
  std::size_t operator()(const Label& label) const noexcept;
};

bool is_subset(const Label& a, const Label& b);
bool is_strict_subset(const Label& a, const Label& b);
Label label_union(const Label& a, const Label& b);
// Number of members of a that also lie in b.
std::size_t overlap(const Label& a, const Label& b);
// "{1,3,4}" with sets numbered from 1.
std::string format_label(const Label& label);

/// m subsets over element indices [0, n). Members of each set are kept
/// ascending; p caches the total membership count.
class SetSystem {
 public:
  SetSystem() = default;
  // Sorts and deduplicates each set's members. Does not validate.
  SetSystem(std::size_t n, std::vector<std::vector<ElementIndex>> sets);

  std::size_t n() const { return n_; }
  std::size_t m() const { return sets_.size(); }
  std::size_t p() const { return p_; }
  const std::vector<std::vector<ElementIndex>>& sets() const { return sets_; }
  const std::vector<ElementIndex>& set(SetIndex i) const { return sets_[i]; }

  bool operator==(const SetSystem&) const = default;

 private:
  friend struct SetSystemTestAccess;
  std::size_t n_ = 0;
  std::vector<std::vector<ElementIndex>> sets_;
  std::size_t p_ = 0;
};

enum class ViolationKind { duplicate_set, empty_set, index_out_of_range, stale_total };

struct Violation {
  ViolationKind kind;
  std::size_t set = 0;
  std::size_t other = 0;  // the earlier set a duplicate repeats
  std::string message;
};

std::vector<Violation> validate(const SetSystem& system);
// Throws InputError listing the first violation.
void require_valid(const SetSystem& system);

// The sets containing element; empty when the element is in no set.
Label signature(ElementIndex element, const SetSystem& system);
// Signatures of every element at once in O(p).
std::vector<Label> signatures(const SetSystem& system);

}  // namespace setmax
