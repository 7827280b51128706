// Copyright 2026 The ntcmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ntcmap/experiments.hpp"
#include "ntcmap/io.hpp"
#include "oracles.hpp"

namespace ntc {
namespace {

std::vector<MetricsRecord> synthetic(const std::vector<std::size_t>& ns,
                                     std::size_t (*f)(std::size_t)) {
  std::vector<MetricsRecord> out;
  for (std::size_t n : ns) {
    MetricsRecord r;
    r.n = n;
    r.dims = {n};
    r.depth_ac = f(n);
    r.depth_ntc = f(n);
    r.swap_count = f(n);
    r.qubits_total = n;
    r.dilation_bound = Rational(1, 1);
    out.push_back(r);
  }
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

TEST(Fit, ExactPowerLaw) {
  const auto recs = synthetic({4, 8, 16, 32, 64}, [](std::size_t n) { return n; });
  const Fit f = fit_exponent(recs, "depth_ntc");
  EXPECT_NEAR(f.slope, 1.0, 1e-9);
  EXPECT_NEAR(f.intercept, 0.0, 1e-9);
  EXPECT_NEAR(f.r2, 1.0, 1e-9);
}

TEST(Fit, LogarithmIsFlat) {
  const auto recs = synthetic({16, 32, 64, 128, 256}, [](std::size_t n) {
    return oracle::ceil_log2(n);
  });
  EXPECT_LT(fit_exponent(recs, "depth_ac").slope, 0.35);
}

TEST(Fit, SquareRoot) {
  const auto recs = synthetic({16, 32, 64, 128, 256}, [](std::size_t n) {
    return static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  });
  EXPECT_NEAR(fit_exponent(recs, "swap_count").slope, 0.5, 0.05);
}

TEST(Fit, RejectsBadInput) {
  auto id = [](std::size_t n) { return n; };
  EXPECT_THROW(fit_exponent(synthetic({4, 8}, id), "depth_ntc"), std::invalid_argument);
  EXPECT_THROW(fit_exponent(synthetic({4, 8, 8}, id), "depth_ntc"), std::invalid_argument);
  EXPECT_THROW(fit_exponent(synthetic({4, 8, 16}, id), "width"), std::invalid_argument);
  auto zero = synthetic({4, 8, 16}, id);
  zero[1].depth_ntc = 0;
  EXPECT_THROW(fit_exponent(zero, "depth_ntc"), std::invalid_argument);
  auto mixed = synthetic({4, 8, 16}, id);
  mixed[2].k = 2;
  EXPECT_THROW(fit_exponent(mixed, "depth_ntc"), std::invalid_argument);
  mixed[2].k = 1;
  mixed[2].placement = PlacementStrategy::InteractionBisection;
  EXPECT_THROW(fit_exponent(mixed, "depth_ntc"), std::invalid_argument);
}

TEST(Csv, EmptyIsHeaderOnly) {
  const std::string csv = to_csv({});
  EXPECT_EQ(csv, std::string(kCsvHeader) + "\n");
  EXPECT_EQ(std::string(kCsvHeader),
            "n,k,dims,adder,placement,mode,depth_ac,depth_ntc,swap_count,qubits_total,"
            "dilation_bound,seed");
}

TEST(Csv, FourRecordsFiveLines) {
  const auto recs = synthetic({2, 4, 8, 16}, [](std::size_t n) { return n + 1; });
  EXPECT_EQ(line_count(to_csv(recs)), 5u);
}

TEST(Csv, RoundTripAndOrdering) {
  auto recs = synthetic({16, 4, 8}, [](std::size_t n) { return 3 * n; });
  recs[0].k = 2;
  recs[0].dims = {4, 4};
  recs[1].mode = RouteMode::CnotChain;
  recs[2].adder = AdderKind::Ripple;
  recs[2].dilation_bound = Rational(7, 6);
  recs[2].seed = 99;
  const std::string text = to_csv(recs);
  const auto back = parse_csv(text);
  ASSERT_EQ(back.size(), 3u);
  // sorted by (k, n)
  EXPECT_EQ(back[0].n, 4u);
  EXPECT_EQ(back[1].n, 8u);
  EXPECT_EQ(back[2].k, 2u);
  EXPECT_EQ(back[2].dims, (std::vector<std::size_t>{4, 4}));
  EXPECT_EQ(back[0], recs[1]);
  EXPECT_EQ(back[1], recs[2]);
  EXPECT_EQ(back[2], recs[0]);
  EXPECT_EQ(to_csv(back), text);
  EXPECT_NE(text.find(",4x4,"), std::string::npos);
}

TEST(Csv, MalformedRowsThrow) {
  EXPECT_THROW(parse_csv("n,k\n1,2\n"), std::invalid_argument);
  EXPECT_THROW(parse_csv(std::string(kCsvHeader) + "\n1,1,4\n"), std::invalid_argument);
}

TEST(Scaling, SingleRecordHoldsInvariant) {
  const auto recs = run_scaling(1, {4}, AdderKind::Cla, PlacementStrategy::IdentitySnake,
                                RouteMode::Swap, 7);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_GE(recs[0].depth_ntc, recs[0].depth_ac);
  EXPECT_EQ(recs[0].qubits_total, gen_cla(4).second.num_qubits);
  EXPECT_GE(recs[0].depth_ntc, recs[0].dilation_bound.ceil());
  EXPECT_TRUE(invariant_violations(recs).empty());
}

TEST(Scaling, LineDepthStrictlyIncreases) {
  const auto recs = run_scaling(1, {8, 16, 32, 64}, AdderKind::Cla,
                                PlacementStrategy::IdentitySnake, RouteMode::Swap, 7);
  ASSERT_EQ(recs.size(), 4u);
  for (std::size_t i = 1; i < recs.size(); ++i) EXPECT_GT(recs[i].depth_ntc, recs[i - 1].depth_ntc);
  EXPECT_TRUE(invariant_violations(recs).empty());
}

TEST(Scaling, SecondDimensionHelpsAtSixtyFour) {
  const auto one = run_scaling(1, {64}, AdderKind::Cla, PlacementStrategy::IdentitySnake,
                               RouteMode::Swap, 7);
  const auto two = run_scaling(2, {64}, AdderKind::Cla, PlacementStrategy::IdentitySnake,
                               RouteMode::Swap, 7);
  EXPECT_LE(two[0].depth_ntc, one[0].depth_ntc);
  EXPECT_EQ(two[0].depth_ac, one[0].depth_ac);
}

TEST(Scaling, DeterministicAndSorted) {
  const auto a = run_scaling(2, {8, 4, 6}, AdderKind::Ripple,
                             PlacementStrategy::InteractionBisection, RouteMode::CnotChain, 3);
  const auto b = run_scaling(2, {6, 8, 4}, AdderKind::Ripple,
                             PlacementStrategy::InteractionBisection, RouteMode::CnotChain, 3);
  EXPECT_EQ(to_csv(a), to_csv(b));
  EXPECT_EQ(a[0].n, 4u);
  EXPECT_EQ(a[2].n, 8u);
}

TEST(Scaling, InstanceAgreesWithEmbeddingMetrics) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const ScalingInstance inst = run_instance(k, 8, AdderKind::Cla,
                                              PlacementStrategy::IdentitySnake,
                                              RouteMode::Swap, 7);
    const auto& r = inst.record;
    ASSERT_GT(inst.tree_diameter, 0u);
    EXPECT_EQ(r.dilation_bound, Rational(inst.tree_metrics.spread, inst.tree_diameter));
    EXPECT_GE(inst.tree_metrics.dilation * inst.tree_diameter, inst.tree_metrics.spread);
    EXPECT_EQ(inst.host_diameter, auto_mesh(k, r.qubits_total).diameter());
    EXPECT_EQ(r.dims, auto_mesh(k, r.qubits_total).dims());
  }
}

TEST(Invariants, FlagBrokenRecords) {
  auto recs = synthetic({4, 8, 16}, [](std::size_t n) { return n; });
  EXPECT_TRUE(invariant_violations(recs).empty());
  recs[1].depth_ntc = recs[1].depth_ac - 1;
  recs[2].dilation_bound = Rational(100, 1);
  EXPECT_EQ(invariant_violations(recs).size(), 2u);
}

TEST(Report, WritesCsvAndSummary) {
  const auto dir = std::filesystem::temp_directory_path() / "ntcmap_report_test";
  std::filesystem::remove_all(dir);
  const auto recs = synthetic({4, 8, 16}, [](std::size_t n) { return n * n; });
  report(recs, {{"depth_ntc", fit_exponent(recs, "depth_ntc")}}, dir.string());
  EXPECT_EQ(slurp(dir / "metrics.csv"), to_csv(recs));
  const Json summary = read_json((dir / "summary.json").string());
  EXPECT_EQ(summary["records"], 3);
  EXPECT_NEAR(summary["fits"]["depth_ntc"]["slope"].get<double>(), 2.0, 1e-9);
  std::filesystem::remove_all(dir);
}

TEST(Report, UnwritablePathThrows) {
  EXPECT_THROW(report({}, {}, "/proc/ntcmap/none"), std::runtime_error);
}

}  // namespace
}  // namespace ntc
