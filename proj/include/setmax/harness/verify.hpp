#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setmax/harness/io.hpp"

namespace setmax::harness {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;
  std::vector<MaximaResult> results;  // lattice, sort, bucket, brute
  // Cover size of every node at layer >= 2, in lattice dump order; geometric
  // covers when the instance has geometry.
  std::vector<std::pair<std::string, std::size_t>> cover_sizes;

  bool ok() const;
  std::string to_text() const;
};

// Runs every solver, cross-checks maxima against the oracle, checks each
// comparison budget, zero-cost construction, a key-remapping transcript
// comparison and, for geometric instances, the induced sets and cover
// invariants. Keys come from the file or from seed.
VerifyReport verify(const InstanceFile& inst, std::uint64_t seed);

}  // namespace setmax::harness
