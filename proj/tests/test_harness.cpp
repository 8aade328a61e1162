#include <gtest/gtest.h>

#include <sstream>

#include "setmax/errors.hpp"
#include "setmax/harness/bench.hpp"
#include "setmax/harness/generators.hpp"
#include "setmax/harness/io.hpp"
#include "setmax/harness/verify.hpp"

using namespace setmax;
using namespace setmax::harness;

namespace {

const char* kTwoSquares = R"({
  "n": 3,
  "keys": [10, 30, 20],
  "geometry": {
    "points": [[1, 1], [5, 5], [3, 3]],
    "polygons": [[[0, 0], [4, 0], [4, 4], [0, 4]], [[2, 2], [6, 2], [6, 6], [2, 6]]],
    "k": 4
  }
})";

}  // namespace

TEST(GenConvex, DeterministicValidAndDistinct) {
  auto a = gen_convex_instance(500, 50, 4, 123);
  auto b = gen_convex_instance(500, 50, 4, 123);
  ASSERT_EQ(a.points, b.points);
  ASSERT_EQ(a.polygons, b.polygons);
  EXPECT_EQ(a.k, 4u);
  for (const auto& p : a.polygons) {
    EXPECT_LE(p.sides(), 4u);
    EXPECT_GE(p.sides(), 3u);
    EXPECT_TRUE(geo::is_strictly_convex_ccw(p.vertices()));
  }
  auto sys = geo::induced_system(a);
  EXPECT_TRUE(validate(sys).empty());
  EXPECT_NE(gen_convex_instance(500, 50, 4, 124).points, a.points);
}

TEST(GenConvex, TrianglesForKThree) {
  auto inst = gen_convex_instance(200, 20, 3, 5);
  for (const auto& p : inst.polygons) EXPECT_EQ(p.sides(), 3u);
}

TEST(GenConvex, RejectsBadParameters) {
  EXPECT_THROW(gen_convex_instance(100, 10, 2, 1), InputError);
  EXPECT_THROW(gen_random_system(10, 3, 1.5, 1), InputError);
}

TEST(Io, ParsesGeometryAndDerivesSets) {
  auto inst = parse_instance(kTwoSquares);
  EXPECT_EQ(inst.system.n(), 3u);
  EXPECT_EQ(inst.system.sets(), (std::vector<std::vector<ElementIndex>>{{0, 2}, {1, 2}}));
  ASSERT_TRUE(inst.keys);
  EXPECT_EQ((*inst.keys)[1], 30);
  ASSERT_TRUE(inst.geometry);
  EXPECT_EQ(inst.geometry->k, 4u);
}

TEST(Io, RoundTrip) {
  auto inst = parse_instance(kTwoSquares);
  auto again = parse_instance(to_json(inst).dump());
  EXPECT_EQ(again.system, inst.system);
  EXPECT_EQ(again.keys, inst.keys);
  EXPECT_EQ(again.geometry->points, inst.geometry->points);
  EXPECT_EQ(again.geometry->polygons, inst.geometry->polygons);
  auto plain = parse_instance(R"({"n": 4, "sets": [[0, 1], [1, 2, 3]]})");
  EXPECT_FALSE(plain.keys);
  EXPECT_EQ(parse_instance(to_json(plain).dump()).system, plain.system);
}

TEST(Io, MalformedJsonReportsPosition) {
  try {
    parse_instance(R"({"n": 3, "sets": [[0, 1], )");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("malformed JSON at byte"), std::string::npos) << e.what();
  }
}

TEST(Io, RejectsBadContent) {
  EXPECT_THROW(parse_instance(R"({"sets": [[0]]})"), InputError);
  EXPECT_THROW(parse_instance(R"({"n": 2, "sets": [[0, 5]]})"), InputError);
  EXPECT_THROW(parse_instance(R"({"n": 2, "sets": [[0], [0]]})"), InputError);
  EXPECT_THROW(parse_instance(R"({"n": 2, "sets": [[0]], "keys": [1]})"), InputError);
  EXPECT_THROW(parse_instance(R"({"n": 2, "sets": [[0]], "keys": [1, 1]})"), InputError);
  EXPECT_THROW(parse_instance(R"({"n": 1, "geometry": {"points": [[0, 0]],
      "polygons": [[[0, 0], [2, 0], [1, 0]]], "k": 3}})"), InputError);
}

TEST(Io, ResultJsonFields) {
  auto inst = parse_instance(kTwoSquares);
  MaximaResult r;
  r.algorithm = Algorithm::lattice;
  r.comparisons = 2;
  r.bound = 5;
  r.maxima = {2, 1};
  auto j = result_to_json(r, inst.system, 4, true);
  EXPECT_EQ(j["algorithm"], "lattice");
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["p"], 4);
  EXPECT_EQ(j["k"], 4);
  EXPECT_EQ(j["comparisons"], 2);
  EXPECT_EQ(j["bound"], 5);
  EXPECT_EQ(j["ok"], true);
}

TEST(Bench, CsvRoundTrip) {
  std::vector<BenchRecord> recs{{"g-100-0", 100, 10, 230, 4, Algorithm::lattice, 120, 300, 0.272727, true},
                                {"g-100-0", 100, 10, 230, 4, Algorithm::bucket, 150, 150, 1.0 / 3.0, false}};
  std::stringstream ss;
  write_csv(ss, recs);
  auto header = ss.str().substr(0, ss.str().find('\n'));
  EXPECT_EQ(header, "instance_id,n,m,p,k,algo,comparisons,bound,ratio,ok");
  EXPECT_EQ(parse_csv(ss), recs);
}

TEST(Bench, SmallRunsAreOk) {
  BenchConfig cfg;
  cfg.sizes = {60, 120};
  cfg.instances = 2;
  auto recs = run_bench(cfg);
  EXPECT_EQ(recs.size(), 2u * 2u * 4u);
  for (const auto& r : recs) {
    EXPECT_TRUE(r.ok) << r.instance_id << " " << to_string(r.algorithm);
    EXPECT_EQ(r.k, 4u);
  }
  cfg.kind = InstanceKind::abstract;
  cfg.cover = CoverMode::greedy;
  for (const auto& r : run_bench(cfg)) {
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.k, 0u);
    EXPECT_DOUBLE_EQ(r.ratio, double(r.comparisons) / double(r.n + r.m));
  }
}

TEST(Bench, DeterministicPerSeed) {
  BenchConfig cfg;
  cfg.sizes = {80};
  cfg.instances = 3;
  EXPECT_EQ(run_bench(cfg), run_bench(cfg));
}

TEST(Verify, TwoSquaresPasses) {
  auto report = verify(parse_instance(kTwoSquares), 1);
  EXPECT_TRUE(report.ok()) << report.to_text();
  ASSERT_EQ(report.results.size(), 4u);
  EXPECT_EQ(report.results[0].maxima, (std::vector<ElementIndex>{2, 1}));
  ASSERT_EQ(report.cover_sizes.size(), 1u);
  EXPECT_EQ(report.cover_sizes[0].second, 2u);
}

TEST(Verify, RandomInstancesPass) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    InstanceFile f;
    f.system = gen_random_system(60, 12, 0.25, seed);
    EXPECT_TRUE(verify(f, seed).ok());
    InstanceFile g;
    g.geometry = gen_convex_instance(300, 30, 5, seed);
    g.system = geo::induced_system(*g.geometry);
    auto report = verify(g, seed);
    EXPECT_TRUE(report.ok()) << report.to_text();
  }
}
