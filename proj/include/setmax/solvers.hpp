#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "setmax/lattice.hpp"
#include "setmax/order.hpp"
#include "setmax/set_system.hpp"

namespace setmax {

enum class Algorithm { lattice, sort, bucket, brute };

std::string to_string(Algorithm algo);
Algorithm parse_algorithm(const std::string& text);

struct MaximaResult {
  Algorithm algorithm = Algorithm::brute;
  std::vector<ElementIndex> maxima;  // argmax of each set
  std::uint64_t comparisons = 0;
  // The algorithm's own comparison budget for this instance.
  std::uint64_t bound = 0;
  // Ledger movement and oracle reads during construction; both must stay 0.
  std::uint64_t construction_comparisons = 0;
  std::uint64_t construction_oracle_reads = 0;
  std::size_t total_cover_size = 0;
  std::size_t cover_fallbacks = 0;
  std::vector<std::pair<ElementIndex, ElementIndex>> transcript;
};

struct LatticeSolveOptions {
  CoverMode cover = CoverMode::greedy;
  std::size_t exact_budget = kDefaultExactBudget;
  bool record_transcript = false;
  // Asserts the bottom-up invariant after every layer using unaudited key
  // access. Throws StructuralError on failure.
  bool check_invariant = false;
};

// n * ceil(log2 n), 0 for n <= 1.
std::uint64_t sort_bound(std::size_t n);

// Reduces every phi to its maximum, then pushes champions from the deepest
// layer up along good covers. covers must already be assigned.
MaximaResult propagate(const Lattice& lattice, const KeySpace& keys,
                       const LatticeSolveOptions& options = {});

MaximaResult solve_lattice(const SetSystem& system, const KeySpace& keys,
                           const LatticeSolveOptions& options = {});
MaximaResult solve_sort(const SetSystem& system, const KeySpace& keys);
MaximaResult solve_bucket(const SetSystem& system, const KeySpace& keys);
// Ground truth by direct scan of the raw keys; reports sum(|S_i| - 1).
MaximaResult solve_bruteforce(const SetSystem& system, const KeySpace& keys);

// Descending merge sort of all element indices through the ledger.
std::vector<ElementIndex> merge_sort_descending(std::size_t n, const KeySpace& keys,
                                                ComparisonLedger& ledger);

}  // namespace setmax
