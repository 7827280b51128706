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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ntcmap/adder.hpp"
#include "ntcmap/embed.hpp"
#include "ntcmap/mesh.hpp"
#include "ntcmap/router.hpp"

namespace ntc {

struct MetricsRecord {
  std::size_t n = 0;
  std::size_t k = 1;
  std::vector<std::size_t> dims;
  AdderKind adder = AdderKind::Cla;
  PlacementStrategy placement = PlacementStrategy::IdentitySnake;
  RouteMode mode = RouteMode::Swap;
  std::size_t depth_ac = 0;
  std::size_t depth_ntc = 0;
  std::size_t swap_count = 0;
  std::size_t qubits_total = 0;
  Rational dilation_bound;
  std::uint64_t seed = 0;

  friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

/// The tree whose induced embedding yields the dilation bound: the carry
/// tree of the final carry for the lookahead adder, the carry chain for the
/// ripple adder.
LogDepthBinaryTree carry_out_tree(const AdderLayout& layout);

struct ScalingInstance {
  MetricsRecord record;
  EmbeddingMetrics tree_metrics;  // induced embedding of carry_out_tree
  std::size_t tree_diameter = 0;
  std::size_t host_diameter = 0;
};

/**
 * One n: generate, decompose CCNOTs, place on auto_mesh(k, qubits), route and
 * measure. The AC circuit is first checked against integer addition on
 * seeded random operands; a mismatch throws std::logic_error.
 */
ScalingInstance run_instance(std::size_t k, std::size_t n, AdderKind adder,
                             PlacementStrategy placement, RouteMode mode,
                             std::uint64_t seed);

/// One record per n, sorted by n.
std::vector<MetricsRecord> run_scaling(std::size_t k,
                                       const std::vector<std::size_t>& n_list,
                                       AdderKind adder,
                                       PlacementStrategy placement,
                                       RouteMode mode, std::uint64_t seed);

/// Human-readable descriptions of every broken record invariant
/// (depth_ntc >= depth_ac, depth_ntc >= ceil(dilation_bound)).
std::vector<std::string> invariant_violations(
    const std::vector<MetricsRecord>& records);

struct Fit {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
};

/**
 * Least-squares fit of log2(field) against log2(n). `field` is one of
 * depth_ac, depth_ntc, swap_count, qubits_total. Throws
 * std::invalid_argument for fewer than 3 records, repeated n, mixed
 * configurations or non-positive values.
 */
Fit fit_exponent(const std::vector<MetricsRecord>& records,
                 const std::string& field);

struct NamedFit {
  std::string name;
  Fit fit;
};

extern const char* const kCsvHeader;

/// CSV text, rows sorted by (k, n). Byte-identical for identical input.
std::string to_csv(std::vector<MetricsRecord> records);
std::vector<MetricsRecord> parse_csv(const std::string& text);

/// Writes metrics.csv and summary.json into `out_dir`, creating it if
/// needed. Throws std::runtime_error if the directory cannot be written.
void report(const std::vector<MetricsRecord>& records,
            const std::vector<NamedFit>& fits, const std::string& out_dir);

}  // namespace ntc
