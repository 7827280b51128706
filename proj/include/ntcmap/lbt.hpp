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
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ntcmap/circuit.hpp"
#include "ntcmap/mesh.hpp"

namespace ntc {

using NodeId = std::uint32_t;

enum class LbtKind : std::uint8_t { Leaf, And, Or, Xor };

std::string_view lbt_kind_name(LbtKind kind);
LbtKind lbt_kind_from_name(std::string_view name);

struct LbtNode {
  NodeId id = 0;
  LbtKind kind = LbtKind::Leaf;
  std::vector<NodeId> children;  // 0 for leaves, 1-2 otherwise
  Qubit output_qubit = 0;

  friend bool operator==(const LbtNode&, const LbtNode&) = default;
};

class TreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Rooted tree of two-input gates over input leaves. Nodes are stored in
 * arbitrary order and looked up by id; `validate` enforces the structural
 * rules (unique ids, no dangling children, single root, acyclic, connected).
 */
struct LogDepthBinaryTree {
  std::vector<LbtNode> nodes;
  NodeId root = 0;

  /// Throws TreeError describing the first structural problem found.
  void validate() const;

  std::size_t leaf_count() const;
  const LbtNode& node(NodeId id) const;

  /// Tree as an undirected graph; vertex i is nodes[i].
  Graph to_graph() const;

  friend bool operator==(const LogDepthBinaryTree&,
                         const LogDepthBinaryTree&) = default;
};

/// Number of nodes on the longest root-to-leaf path.
std::size_t tree_depth(const LogDepthBinaryTree& tree);

/**
 * Balanced tree over `n` leaves with every internal node of kind `kind`.
 * Left subtrees take the larger half. Node ids follow BFS order from the
 * root; leaves read qubits 0..n-1 left to right. Internal And/Or nodes write
 * fresh ancillae n, n+1, ... in BFS order; Xor nodes accumulate in place into
 * their right child's qubit.
 */
LogDepthBinaryTree balanced_tree(std::size_t n, LbtKind kind);

/// Circuit realising every internal node of `tree`, children before parents.
/// Throws TreeError for an invalid tree.
Circuit emit_circuit(const LogDepthBinaryTree& tree);

/// A generated single-output Boolean circuit and where its pieces live.
struct BooleanCircuit {
  Circuit circuit;
  std::vector<Qubit> inputs;
  std::vector<Qubit> ancillae;
  Qubit output = 0;
};

/// Copies qubit 0 onto qubits 1..n_copies-1 (initially 0) by CNOT doubling;
/// depth ceil(log2 n_copies).
Circuit fanout_tree(std::size_t n_copies);

/// In-place XOR reduction; the result lands on qubit n-1.
BooleanCircuit parity_tree(std::size_t n);

enum class AndForm {
  Ccnot,          // result written to a fresh ancilla
  CcnotWithSwap,  // result swapped back onto the left operand
};

/// Conjunction of n >= 2 inputs using n-1 ancillae.
BooleanCircuit and_tree(std::size_t n, AndForm form = AndForm::Ccnot);

/// Disjunction by De Morgan around and_tree; inputs are restored.
BooleanCircuit or_tree(std::size_t n);

}  // namespace ntc
