// setmax: generate, solve, verify and benchmark set-maxima instances.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "setmax/errors.hpp"
#include "setmax/geometry/instance.hpp"
#include "setmax/harness/bench.hpp"
#include "setmax/harness/generators.hpp"
#include "setmax/harness/io.hpp"
#include "setmax/harness/verify.hpp"
#include "setmax/solvers.hpp"

namespace {

using namespace setmax;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

KeySpace keys_for(const harness::InstanceFile& inst, std::uint64_t seed) {
  return inst.keys ? KeySpace(*inst.keys) : KeySpace::random_permutation(inst.system.n(), seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comparison-counting set-maxima solvers"};
  app.require_subcommand(1);

  std::string kind = "abstract";
  std::size_t n = 100, m = 10, k = 4;
  double density = 0.2;
  std::uint64_t seed = 1;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "emit a JSON instance");
  gen->add_option("--kind", kind, "abstract, convex or circle")
      ->check(CLI::IsMember({"abstract", "convex", "circle"}));
  gen->add_option("--n", n, "element count");
  gen->add_option("--m", m, "set count");
  gen->add_option("--k", k, "max polygon sides (convex)");
  gen->add_option("--density", density, "membership probability (abstract, circle)");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path, "output file (default stdout)");

  std::string instance_path;
  std::string algo = "lattice";
  std::optional<std::string> cover;
  auto* solve = app.add_subcommand("solve", "run one algorithm and print the result JSON");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--algo", algo)->check(CLI::IsMember({"lattice", "sort", "bucket", "brute"}));
  solve->add_option("--cover", cover, "greedy, exact or geometric (default geometric when the instance has geometry)")
      ->check(CLI::IsMember({"greedy", "exact", "geometric"}));
  solve->add_option("--seed", seed, "key permutation seed when the file has no keys");
  solve->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "cross-check every solver on one instance");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("--seed", seed);

  std::vector<std::size_t> sizes{100, 1000};
  std::size_t bench_m = 0;
  double m_ratio = 0.1;
  std::size_t instances = 1;
  std::vector<std::string> algos;
  std::string bench_cover = "geometric";
  std::string bench_kind = "geometric";
  auto* bench = app.add_subcommand("bench", "sweep sizes and write CSV");
  bench->add_option("--kind", bench_kind)->check(CLI::IsMember({"abstract", "geometric"}));
  bench->add_option("--n", sizes, "element counts")->delimiter(',');
  bench->add_option("--m", bench_m, "fixed set count (default n * m-ratio)");
  bench->add_option("--m-ratio", m_ratio);
  bench->add_option("--k", k);
  bench->add_option("--density", density);
  bench->add_option("--seed", seed);
  bench->add_option("--instances", instances, "instances per size");
  bench->add_option("--algo", algos, "algorithms (default all)")
      ->check(CLI::IsMember({"lattice", "sort", "bucket", "brute"}));
  bench->add_option("--cover", bench_cover)->check(CLI::IsMember({"greedy", "exact", "geometric"}));
  bench->add_option("--out", out_path, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*gen) {
      harness::InstanceFile inst;
      if (kind == "convex") {
        auto g = harness::gen_convex_instance(n, m, k, seed);
        inst.system = geo::induced_system(g);
        inst.geometry = std::move(g);
      } else {
        inst.system = harness::gen_random_system(n, m, density, seed);
        if (kind == "circle") inst.geometry = geo::circle_embedding(inst.system);
      }
      auto keys = KeySpace::random_permutation(n, harness::derive_seed(seed, 7));
      std::vector<std::int64_t> raw(n);
      for (ElementIndex e = 0; e < n; ++e) raw[e] = oracle::raw_key(keys, e);
      inst.keys = std::move(raw);
      emit(harness::to_json(inst).dump() + "\n", out_path);
      return kExitOk;
    }

    if (*solve) {
      auto inst = harness::load_instance(instance_path);
      auto keys = keys_for(inst, seed);
      require_valid(inst.system);
      MaximaResult result;
      std::optional<std::size_t> k_out;
      switch (parse_algorithm(algo)) {
        case Algorithm::lattice: {
          LatticeSolveOptions opts;
          if (inst.geometry) {
            opts.cover = parse_cover_mode(cover.value_or("geometric"));
            result = geo::solve_geometric(*inst.geometry, keys, opts).result;
          } else {
            opts.cover = parse_cover_mode(cover.value_or("greedy"));
            if (opts.cover == CoverMode::geometric) throw InputError("--cover geometric needs a geometric instance");
            result = solve_lattice(inst.system, keys, opts);
          }
          break;
        }
        case Algorithm::sort: result = solve_sort(inst.system, keys); break;
        case Algorithm::bucket: result = solve_bucket(inst.system, keys); break;
        case Algorithm::brute: result = solve_bruteforce(inst.system, keys); break;
      }
      if (inst.geometry) k_out = inst.geometry->k;
      if (result.algorithm == Algorithm::bucket && double(inst.system.m()) > std::log2(double(std::max<std::size_t>(inst.system.n(), 2)))) {
        std::cerr << "note: the bucket method is meant for m much smaller than log n\n";
      }
      auto oracle_result = solve_bruteforce(inst.system, keys);
      bool within = result.algorithm == Algorithm::bucket ? result.comparisons == result.bound
                                                          : result.comparisons <= result.bound;
      bool ok = result.maxima == oracle_result.maxima && within;
      emit(harness::result_to_json(result, inst.system, k_out, ok).dump() + "\n", out_path);
      return ok ? kExitOk : kExitVerifyFailed;
    }

    if (*verify) {
      auto inst = harness::load_instance(instance_path);
      auto report = harness::verify(inst, seed);
      std::cout << report.to_text();
      return report.ok() ? kExitOk : kExitVerifyFailed;
    }

    if (*bench) {
      harness::BenchConfig config;
      config.kind = bench_kind == "abstract" ? harness::InstanceKind::abstract : harness::InstanceKind::geometric;
      config.sizes = sizes;
      config.m = bench_m;
      config.m_ratio = m_ratio;
      config.k = k;
      config.density = density;
      config.seed = seed;
      config.instances = instances;
      config.cover = parse_cover_mode(bench_cover);
      if (!algos.empty()) {
        config.algorithms.clear();
        for (const auto& a : algos) config.algorithms.push_back(parse_algorithm(a));
      }
      auto records = harness::run_bench(config);
      std::ostringstream csv;
      harness::write_csv(csv, records);
      emit(csv.str(), out_path);
      bool all_ok = std::all_of(records.begin(), records.end(), [](const auto& r) { return r.ok; });
      if (!all_ok) std::cerr << "bench: at least one record failed verification\n";
      return all_ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const GenerationError& e) {
    std::cerr << "generation error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}
