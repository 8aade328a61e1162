#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace setmax {

using ElementIndex = std::uint32_t;

enum class Ordering { less, greater };

/// Counts key comparisons for one solve. Optionally records the compared
/// pairs so two runs can be checked for an identical comparison schedule.
class ComparisonLedger {
 public:
  ComparisonLedger() = default;
  explicit ComparisonLedger(bool record_transcript) : recording_(record_transcript) {}

  std::uint64_t count() const { return count_; }
  const std::vector<std::pair<ElementIndex, ElementIndex>>& transcript() const {
    return transcript_;
  }

 private:
  friend class KeySpace;
  void charge(ElementIndex i, ElementIndex j) {
    ++count_;
    if (recording_) transcript_.emplace_back(i, j);
  }

  std::uint64_t count_ = 0;
  bool recording_ = false;
  std::vector<std::pair<ElementIndex, ElementIndex>> transcript_;
};

class KeySpace;

namespace oracle {
// Unaudited key access. Reserved for the brute-force solver, test oracles and
// debug invariant checks; every call bumps a per-thread counter so tests can
// assert that production paths never use it.
std::int64_t raw_key(const KeySpace& keys, ElementIndex i);
std::uint64_t access_count();
}  // namespace oracle

/// The hidden total order on element keys. Keys are pairwise distinct and
/// only observable through compare().
class KeySpace {
 public:
  // Throws InputError if keys are not pairwise distinct.
  explicit KeySpace(std::vector<std::int64_t> keys);

  // Keys 1..n in an order determined by seed.
  static KeySpace random_permutation(std::size_t n, std::uint64_t seed);

  std::size_t size() const { return keys_.size(); }

  // Audited comparison of x_i against x_j; charges exactly one comparison.
  Ordering compare(ElementIndex i, ElementIndex j, ComparisonLedger& ledger) const;

 private:
  friend std::int64_t oracle::raw_key(const KeySpace&, ElementIndex);
  std::vector<std::int64_t> keys_;
};

// Index of the largest key among indices using |indices| - 1 comparisons.
ElementIndex max_of_class(std::span<const ElementIndex> indices, const KeySpace& keys,
                          ComparisonLedger& ledger);

}  // namespace setmax
