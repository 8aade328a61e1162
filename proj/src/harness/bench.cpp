#include "setmax/harness/bench.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "setmax/errors.hpp"
#include "setmax/geometry/instance.hpp"
#include "setmax/harness/generators.hpp"

namespace setmax::harness {

namespace {

struct Job {
  std::size_t n;
  std::size_t instance;
};

std::vector<BenchRecord> run_job(const BenchConfig& config, const Job& job) {
  const std::size_t n = job.n;
  const std::size_t m =
      config.m ? config.m
               : std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(double(n) * config.m_ratio)));
  const auto seed = derive_seed(config.seed, n * 1000003ULL + job.instance);
  const bool geometric = config.kind == InstanceKind::geometric;

  geo::GeometricInstance inst;
  SetSystem system;
  if (geometric) {
    inst = gen_convex_instance(n, m, config.k, seed);
    system = geo::induced_system(inst);
  } else {
    system = gen_random_system(n, m, config.density, seed);
  }
  auto keys = KeySpace::random_permutation(n, derive_seed(seed, 7));
  auto oracle = solve_bruteforce(system, keys);

  std::string id = std::string(geometric ? "geo" : "abs") + "-n" + std::to_string(n) + "-i" +
                   std::to_string(job.instance);
  const double scale = geometric ? double(config.k) * double(n + m) : double(n + m);
  std::vector<BenchRecord> out;
  for (auto algo : config.algorithms) {
    MaximaResult r;
    switch (algo) {
      case Algorithm::lattice: {
        LatticeSolveOptions opts;
        opts.cover = config.cover;
        if (geometric) {
          r = geo::solve_geometric(inst, keys, opts).result;
        } else {
          if (opts.cover == CoverMode::geometric) opts.cover = CoverMode::greedy;
          r = solve_lattice(system, keys, opts);
        }
        break;
      }
      case Algorithm::sort: r = solve_sort(system, keys); break;
      case Algorithm::bucket: r = solve_bucket(system, keys); break;
      case Algorithm::brute: r = oracle; break;
    }
    BenchRecord rec;
    rec.instance_id = id;
    rec.n = n;
    rec.m = system.m();
    rec.p = system.p();
    rec.k = geometric ? config.k : 0;
    rec.algorithm = algo;
    rec.comparisons = r.comparisons;
    rec.bound = r.bound;
    rec.ratio = double(r.comparisons) / scale;
    bool within = algo == Algorithm::bucket ? r.comparisons == r.bound : r.comparisons <= r.bound;
    rec.ok = r.maxima == oracle.maxima && within && r.construction_oracle_reads == 0;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  std::vector<Job> jobs;
  for (auto n : config.sizes) {
    for (std::size_t t = 0; t < config.instances; ++t) jobs.push_back({n, t});
  }
  std::vector<std::vector<BenchRecord>> per_job(jobs.size());
  std::vector<std::string> errors(jobs.size());
  const auto count = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    try {
      per_job[static_cast<std::size_t>(t)] = run_job(config, jobs[static_cast<std::size_t>(t)]);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(t)] = e.what();
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw GenerationError("bench job failed: " + e);
  }
  std::vector<BenchRecord> records;
  for (auto& batch : per_job) {
    for (auto& r : batch) records.push_back(std::move(r));
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "instance_id,n,m,p,k,algo,comparisons,bound,ratio,ok\n";
  auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& r : records) {
    out << r.instance_id << ',' << r.n << ',' << r.m << ',' << r.p << ',' << r.k << ','
        << to_string(r.algorithm) << ',' << r.comparisons << ',' << r.bound << ',' << r.ratio << ','
        << (r.ok ? "true" : "false") << '\n';
  }
  out.precision(old_precision);
}

std::vector<BenchRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "instance_id,n,m,p,k,algo,comparisons,bound,ratio,ok") {
    throw InputError("CSV header mismatch");
  }
  std::vector<BenchRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 10) throw InputError("CSV line " + std::to_string(line_no) + ": expected 10 fields");
    try {
      BenchRecord r;
      r.instance_id = f[0];
      r.n = std::stoull(f[1]);
      r.m = std::stoull(f[2]);
      r.p = std::stoull(f[3]);
      r.k = std::stoull(f[4]);
      r.algorithm = parse_algorithm(f[5]);
      r.comparisons = std::stoull(f[6]);
      r.bound = std::stoull(f[7]);
      r.ratio = std::stod(f[8]);
      if (f[9] != "true" && f[9] != "false") throw InputError("bad ok flag");
      r.ok = f[9] == "true";
      out.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw InputError("CSV line " + std::to_string(line_no) + ": malformed field");
    }
  }
  return out;
}

}  // namespace setmax::harness
