#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "setmax/lattice.hpp"
#include "setmax/solvers.hpp"

namespace setmax::harness {

enum class InstanceKind { abstract, geometric };

struct BenchConfig {
  InstanceKind kind = InstanceKind::geometric;
  std::vector<std::size_t> sizes{100, 1000};
  // m = max(1, round(n * m_ratio)) unless m is set.
  double m_ratio = 0.1;
  std::size_t m = 0;
  std::size_t k = 4;
  double density = 0.2;
  std::uint64_t seed = 1;
  std::size_t instances = 1;
  std::vector<Algorithm> algorithms{Algorithm::lattice, Algorithm::sort, Algorithm::bucket,
                                    Algorithm::brute};
  CoverMode cover = CoverMode::geometric;
};

/// CSV columns: instance_id,n,m,p,k,algo,comparisons,bound,ratio,ok
/// ratio = comparisons / (k (n + m)) on geometric instances and
/// comparisons / (n + m) on abstract ones (k printed as 0).
struct BenchRecord {
  std::string instance_id;
  std::size_t n = 0, m = 0, p = 0, k = 0;
  Algorithm algorithm = Algorithm::brute;
  std::uint64_t comparisons = 0;
  std::uint64_t bound = 0;
  double ratio = 0.0;
  bool ok = false;

  bool operator==(const BenchRecord&) const = default;
};

// ok = maxima equal the brute-force oracle and the count respects the
// algorithm's bound (equals it for the bucket solver). Instances run
// concurrently; records come back in (size, instance, algorithm) order.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_csv(std::istream& in);

}  // namespace setmax::harness
