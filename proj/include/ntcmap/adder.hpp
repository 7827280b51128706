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

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ntcmap/circuit.hpp"
#include "ntcmap/lbt.hpp"
#include "ntcmap/sim.hpp"

namespace ntc {

enum class AdderKind { Cla, Ripple };

std::string_view adder_name(AdderKind kind);
AdderKind adder_from_name(std::string_view name);

/**
 * Where an out-of-place adder keeps its registers. All lists are pairwise
 * disjoint. The circuit is `compute_gates` compute-and-fanout gates followed
 * by `copyout_gates` gates that only write `sum` and `carry_out`.
 */
struct AdderLayout {
  std::size_t n = 0;
  std::size_t num_qubits = 0;
  std::vector<Qubit> a;
  std::vector<Qubit> b;
  std::vector<Qubit> sum;
  Qubit carry_out = 0;
  std::optional<Qubit> carry_in;
  std::vector<Qubit> ancillae;
  std::vector<Qubit> fanout_region;
  std::size_t compute_gates = 0;
  std::size_t copyout_gates = 0;

  /// Carry trees of the lookahead adder, carry c_{i+1} at index i. Leaves are
  /// the private generate copies, internal nodes the qubits holding each
  /// block-generate value. Empty for the ripple adder.
  std::vector<LogDepthBinaryTree> carry_trees;

  friend bool operator==(const AdderLayout&, const AdderLayout&) = default;
};

struct AdderOptions {
  /// Allocate the input carry c_0 as a real input instead of a constant 0.
  bool carry_in = false;
};

using AdderCircuit = std::pair<Circuit, AdderLayout>;

/**
 * Out-of-place carry-lookahead adder in fanout-then-compute form:
 *  1. p_i = a_i ^ b_i and g_i = a_i & b_i for all i at once;
 *  2. CNOT fanout trees give every carry circuit private copies of each
 *     g_j (and of each p_j it actually reads);
 *  3. carry c_{i+1} is a balanced tree of block (generate, propagate)
 *     combines over its copies:
 *       G = G_hi | (P_hi & G_lo),   P = P_hi & P_lo;
 *     G_hi and P_hi are never both set, so the OR is accumulated with a
 *     CNOT and a CCNOT into a fresh ancilla;
 *  4. s_i = p_i ^ c_i, carry_out = c_n.
 * Throws std::invalid_argument for n == 0.
 */
AdderCircuit gen_cla(std::size_t n, const AdderOptions& options = {});

/**
 * Out-of-place ripple-carry baseline, linear depth. Qubits are interleaved
 * per bit as (s_i, b_i, a_i, c_{i+1}) so every gate's operands fall within
 * five consecutive indices.
 */
AdderCircuit gen_ripple(std::size_t n, const AdderOptions& options = {});

AdderCircuit gen_adder(AdderKind kind, std::size_t n,
                       const AdderOptions& options = {});

/**
 * Appends the mirror image of the compute-and-fanout gates so every ancilla
 * and fanout copy returns to 0 while sum and carry_out keep their values.
 * Throws std::invalid_argument if `layout` does not describe `circuit`.
 */
Circuit uncompute_ancillae(const Circuit& circuit, const AdderLayout& layout);

/// Loads a and b (and carry-in), zeros everything else.
BitState adder_input(const AdderLayout& layout, std::uint64_t a,
                     std::uint64_t b, bool carry_in = false);

}  // namespace ntc
