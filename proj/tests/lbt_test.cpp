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

#include <set>

#include "ntcmap/io.hpp"
#include "ntcmap/lbt.hpp"
#include "ntcmap/sim.hpp"
#include "oracles.hpp"

namespace ntc {
namespace {

// Runs `bc` on every assignment of its inputs and compares the output bit
// with `f(mask)`; ancillae start at 0.
template <typename F>
void check_truth_table(const BooleanCircuit& bc, F f) {
  const std::size_t n = bc.inputs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    BitState in(bc.circuit.num_qubits());
    for (std::size_t i = 0; i < n; ++i) in.set(bc.inputs[i], (mask >> i) & 1);
    const BitState out = simulate_classical(bc.circuit, in);
    ASSERT_EQ(out.get(bc.output), f(mask)) << "input mask " << mask;
  }
}

TEST(Fanout, FourCopies) {
  const Circuit c = fanout_tree(4);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(depth(c), 2u);
}

TEST(Fanout, OneCopyIsEmpty) {
  EXPECT_TRUE(fanout_tree(1).empty());
  EXPECT_EQ(depth(fanout_tree(1)), 0u);
}

TEST(Fanout, ZeroCopiesThrows) { EXPECT_THROW(fanout_tree(0), std::invalid_argument); }

TEST(Fanout, SevenCopiesOfEachBit) {
  const Circuit c = fanout_tree(7);
  EXPECT_EQ(depth(c), 3u);
  for (bool b : {false, true}) {
    BitState in(7);
    in.set(0, b);
    const BitState out = simulate_classical(c, in);
    for (std::size_t q = 0; q < 7; ++q) EXPECT_EQ(out.get(q), b);
  }
}

TEST(Fanout, CopiesForAllSmallSizes) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const Circuit c = fanout_tree(n);
    BitState in(n);
    in.set(0, true);
    EXPECT_EQ(simulate_classical(c, in).to_string(), std::string(n, '1'));
    EXPECT_EQ(simulate_classical(c, BitState(n)).to_string(), std::string(n, '0'));
  }
}

TEST(Parity, EightInputsLandOnQ7) {
  const BooleanCircuit p = parity_tree(8);
  EXPECT_EQ(depth(p.circuit), 3u);
  EXPECT_EQ(p.output, 7u);
  EXPECT_FALSE(simulate_classical(p.circuit, BitState::from_string("11111111")).get(7));
}

TEST(Parity, TwoInputsIsOneCnot) {
  const BooleanCircuit p = parity_tree(2);
  ASSERT_EQ(p.circuit.size(), 1u);
  EXPECT_EQ(p.circuit[0].kind(), GateKind::CNOT);
  EXPECT_EQ(depth(p.circuit), 1u);
}

TEST(Parity, FiveInputs) {
  const BooleanCircuit p = parity_tree(5);
  EXPECT_TRUE(simulate_classical(p.circuit, BitState::from_string("10110")).get(p.output));
}

TEST(Parity, ZeroInputsThrows) { EXPECT_THROW(parity_tree(0), std::invalid_argument); }

TEST(AndTree, TwoInputsIsOneToffoliIntoAncilla) {
  const BooleanCircuit a = and_tree(2);
  ASSERT_EQ(a.circuit.size(), 1u);
  EXPECT_EQ(a.circuit[0], Gate::ccnot(0, 1, 2));
  EXPECT_EQ(a.output, 2u);
}

TEST(AndTree, SixInputsHasThreeToffoliLayers) {
  EXPECT_EQ(depth(and_tree(6).circuit), 3u);
}

TEST(AndTree, FourInputs1101IsZero) {
  const BooleanCircuit a = and_tree(4);
  BitState in(a.circuit.num_qubits());
  const std::string bits = "1101";
  for (std::size_t i = 0; i < 4; ++i) in.set(a.inputs[i], bits[i] == '1');
  EXPECT_FALSE(simulate_classical(a.circuit, in).get(a.output));
}

TEST(AndTree, RejectsFewerThanTwoInputs) {
  EXPECT_THROW(and_tree(1), std::invalid_argument);
  EXPECT_THROW(or_tree(1), std::invalid_argument);
}

TEST(OrTree, Boundaries) {
  const BooleanCircuit o = or_tree(2);
  auto run = [&o](const std::string& bits) {
    BitState in(o.circuit.num_qubits());
    for (std::size_t i = 0; i < bits.size(); ++i) in.set(o.inputs[i], bits[i] == '1');
    return simulate_classical(o.circuit, in).get(o.output);
  };
  EXPECT_FALSE(run("00"));
  EXPECT_TRUE(run("01"));
  const BooleanCircuit six = or_tree(6);
  EXPECT_FALSE(simulate_classical(six.circuit, BitState(six.circuit.num_qubits())).get(six.output));
}

TEST(OrTree, FiveInputs00100) {
  const BooleanCircuit o = or_tree(5);
  BitState in(o.circuit.num_qubits());
  in.set(o.inputs[2], true);
  EXPECT_TRUE(simulate_classical(o.circuit, in).get(o.output));
}

class Generators : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Generators, TruthTablesExhaustive) {
  const std::size_t n = GetParam();
  check_truth_table(parity_tree(n), [](std::uint64_t m) { return std::popcount(m) % 2 == 1; });
  if (n < 2) return;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  check_truth_table(and_tree(n), [all](std::uint64_t m) { return m == all; });
  check_truth_table(and_tree(n, AndForm::CcnotWithSwap), [all](std::uint64_t m) { return m == all; });
  check_truth_table(or_tree(n), [](std::uint64_t m) { return m != 0; });
}

TEST_P(Generators, AncillaCountIsNMinusOne) {
  const std::size_t n = GetParam();
  if (n < 2) return;
  EXPECT_EQ(and_tree(n).ancillae.size(), n - 1);
  EXPECT_EQ(and_tree(n).circuit.num_qubits(), 2 * n - 1);
  EXPECT_EQ(or_tree(n).ancillae.size(), n - 1);
}

TEST_P(Generators, AndDepthIsCeilLog) {
  const std::size_t n = GetParam();
  if (n < 2) return;
  EXPECT_EQ(depth(and_tree(n).circuit), oracle::ceil_log2(n));
}

TEST_P(Generators, OrRestoresInputs) {
  const std::size_t n = GetParam();
  if (n < 2) return;
  const BooleanCircuit o = or_tree(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    BitState in(o.circuit.num_qubits());
    for (std::size_t i = 0; i < n; ++i) in.set(o.inputs[i], (mask >> i) & 1);
    const BitState out = simulate_classical(o.circuit, in);
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(out.get(o.inputs[i]), in.get(o.inputs[i]));
  }
}

TEST_P(Generators, Deterministic) {
  const std::size_t n = GetParam();
  EXPECT_EQ(circuit_to_json(parity_tree(n).circuit).dump(),
            circuit_to_json(parity_tree(n).circuit).dump());
  EXPECT_EQ(circuit_to_json(fanout_tree(n)).dump(), circuit_to_json(fanout_tree(n)).dump());
}

INSTANTIATE_TEST_SUITE_P(UpToTen, Generators, ::testing::Range<std::size_t>(1, 11));

TEST(Depths, FanoutAndParityAreCeilLogUpTo1024) {
  for (std::size_t n = 1; n <= 1024; ++n) {
    ASSERT_EQ(depth(fanout_tree(n)), oracle::ceil_log2(n)) << n;
    ASSERT_EQ(depth(parity_tree(n).circuit), oracle::ceil_log2(n)) << n;
  }
}

TEST(TreeDepth, SixLeafTreeHasFourNodesOnLongestPath) {
  EXPECT_EQ(tree_depth(balanced_tree(6, LbtKind::And)), oracle::ceil_log2(6) + 1);
}

TEST(TreeDepth, SingleNode) { EXPECT_EQ(tree_depth(balanced_tree(1, LbtKind::And)), 1u); }

TEST(TreeDepth, CompleteEightLeafTree) {
  EXPECT_EQ(tree_depth(balanced_tree(8, LbtKind::Xor)), 4u);
}

TEST(EmitCircuit, SixLeafAndTreeIsDepthThree) {
  const auto t = balanced_tree(6, LbtKind::And);
  const Circuit c = emit_circuit(t);
  EXPECT_EQ(depth(c), 3u);
  EXPECT_EQ(depth(c), tree_depth(t) - 1);
}

TEST(EmitCircuit, SingleLeafIsEmpty) {
  EXPECT_TRUE(emit_circuit(balanced_tree(1, LbtKind::Or)).empty());
}

// Layer-by-layer gate sets, so gate order inside a layer does not matter.
std::vector<std::set<std::string>> layered(const Circuit& c) {
  std::vector<std::set<std::string>> out;
  for (const auto& layer : asap_schedule(c).layers) {
    std::set<std::string> s;
    for (std::size_t g : layer) s.insert(c[g].to_string());
    out.push_back(std::move(s));
  }
  return out;
}

TEST(EmitCircuit, EightLeafXorTreeIsTheParityCircuit) {
  Circuit expected(8);
  for (Qubit q : {0u, 2u, 4u, 6u}) expected.append(Gate::cnot(q, q + 1));
  expected.append(Gate::cnot(1, 3));
  expected.append(Gate::cnot(5, 7));
  expected.append(Gate::cnot(3, 7));
  const Circuit emitted = emit_circuit(balanced_tree(8, LbtKind::Xor));
  EXPECT_EQ(layered(emitted), layered(expected));
  EXPECT_EQ(layered(parity_tree(8).circuit), layered(expected));
}

TEST(EmitCircuit, DepthMatchesTreeForAllKinds) {
  for (LbtKind k : {LbtKind::And, LbtKind::Or, LbtKind::Xor}) {
    for (std::size_t n = 1; n <= 33; ++n) {
      const auto t = balanced_tree(n, k);
      const std::size_t levels = tree_depth(t) - 1;
      if (k == LbtKind::Or) {
        // De Morgan X gates wrap every level
        EXPECT_LE(depth(emit_circuit(t)), 3 * levels);
      } else {
        EXPECT_EQ(depth(emit_circuit(t)), levels);
      }
      EXPECT_EQ(tree_depth(t), oracle::ceil_log2(n) + 1);
    }
  }
}

TEST(TreeValidation, StructuralErrors) {
  LogDepthBinaryTree dangling;
  dangling.nodes = {{0, LbtKind::And, {1, 9}, 0}, {1, LbtKind::Leaf, {}, 1}};
  EXPECT_THROW(dangling.validate(), TreeError);

  LogDepthBinaryTree cycle;
  cycle.nodes = {{0, LbtKind::Xor, {1}, 0}, {1, LbtKind::Xor, {0}, 1}};
  EXPECT_THROW(cycle.validate(), TreeError);

  LogDepthBinaryTree two_roots;
  two_roots.nodes = {{0, LbtKind::Leaf, {}, 0}, {1, LbtKind::Leaf, {}, 1}};
  EXPECT_THROW(two_roots.validate(), TreeError);

  LogDepthBinaryTree dup;
  dup.nodes = {{0, LbtKind::And, {1, 1}, 0}, {1, LbtKind::Leaf, {}, 1}};
  EXPECT_THROW(dup.validate(), TreeError);
  EXPECT_THROW(emit_circuit(dangling), TreeError);
}

TEST(TreeJson, RoundTrip) {
  const auto t = balanced_tree(7, LbtKind::And);
  EXPECT_EQ(tree_from_json(tree_to_json(t)), t);
  EXPECT_THROW(tree_from_json(Json::parse(R"({"root":0,"nodes":[{"id":0,"kind":"and","children":[3]}]})")),
               std::invalid_argument);
}

}  // namespace
}  // namespace ntc
