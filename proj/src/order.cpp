#include "setmax/order.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "setmax/errors.hpp"

namespace setmax {

namespace {
thread_local std::uint64_t g_oracle_accesses = 0;
}

namespace oracle {

std::int64_t raw_key(const KeySpace& keys, ElementIndex i) {
  if (i >= keys.keys_.size()) throw InputError("raw_key: index out of range");
  ++g_oracle_accesses;
  return keys.keys_[i];
}

std::uint64_t access_count() { return g_oracle_accesses; }

}  // namespace oracle

KeySpace::KeySpace(std::vector<std::int64_t> keys) : keys_(std::move(keys)) {
  std::unordered_set<std::int64_t> seen;
  seen.reserve(keys_.size());
  for (auto k : keys_) {
    if (!seen.insert(k).second) {
      throw InputError("keys must be pairwise distinct (duplicate " + std::to_string(k) + ")");
    }
  }
}

KeySpace KeySpace::random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::int64_t> keys(n);
  std::iota(keys.begin(), keys.end(), 1);
  std::mt19937_64 rng(seed);
  std::shuffle(keys.begin(), keys.end(), rng);
  return KeySpace(std::move(keys));
}

Ordering KeySpace::compare(ElementIndex i, ElementIndex j, ComparisonLedger& ledger) const {
  if (i >= keys_.size() || j >= keys_.size()) {
    throw InputError("compare: element index out of range");
  }
  if (i == j) throw ContractViolation("compare: an element cannot be compared with itself");
  ledger.charge(i, j);
  return keys_[i] < keys_[j] ? Ordering::less : Ordering::greater;
}

ElementIndex max_of_class(std::span<const ElementIndex> indices, const KeySpace& keys,
                          ComparisonLedger& ledger) {
  if (indices.empty()) throw InputError("max_of_class: empty class");
  ElementIndex best = indices.front();
  for (auto idx : indices.subspan(1)) {
    if (keys.compare(idx, best, ledger) == Ordering::greater) best = idx;
  }
  return best;
}

}  // namespace setmax
