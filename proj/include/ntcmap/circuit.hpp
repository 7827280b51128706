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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ntc {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t { X, H, T, Tdg, CNOT, CCNOT, SWAP };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
unsigned gate_arity(GateKind kind);

/// True for the reversible classical subset {X, CNOT, CCNOT, SWAP}.
bool is_classical(GateKind kind);

/**
 * A gate acting on 1-3 distinct qubits.
 *
 * Operand order is significant: CNOT is (control, target) and CCNOT is
 * (control, control, target).
 */
class Gate {
 public:
  Gate(GateKind kind, std::initializer_list<Qubit> qubits);
  Gate(GateKind kind, std::span<const Qubit> qubits);

  static Gate x(Qubit q) { return Gate(GateKind::X, {q}); }
  static Gate h(Qubit q) { return Gate(GateKind::H, {q}); }
  static Gate t(Qubit q) { return Gate(GateKind::T, {q}); }
  static Gate tdg(Qubit q) { return Gate(GateKind::Tdg, {q}); }
  static Gate cnot(Qubit c, Qubit t) { return Gate(GateKind::CNOT, {c, t}); }
  static Gate ccnot(Qubit c0, Qubit c1, Qubit t) {
    return Gate(GateKind::CCNOT, {c0, c1, t});
  }
  static Gate swap(Qubit a, Qubit b) { return Gate(GateKind::SWAP, {a, b}); }

  GateKind kind() const { return kind_; }
  unsigned arity() const { return arity_; }
  std::span<const Qubit> qubits() const { return {qubits_.data(), arity_}; }
  Qubit operator[](std::size_t i) const { return qubits_[i]; }

  /// The highest qubit index used by the gate.
  Qubit max_qubit() const;

  std::string to_string() const;

  friend bool operator==(const Gate& a, const Gate& b) {
    return a.kind_ == b.kind_ && a.arity_ == b.arity_ &&
           a.qubits_ == b.qubits_;
  }

 private:
  void init(std::span<const Qubit> qubits);

  GateKind kind_;
  std::uint8_t arity_ = 0;
  std::array<Qubit, 3> qubits_{};
};

/// An ordered gate list over a fixed register.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  auto begin() const { return gates_.begin(); }
  auto end() const { return gates_.end(); }

  /// Appends after checking operands against the register width.
  /// Throws std::out_of_range for an operand >= num_qubits().
  void append(const Gate& gate);
  void append(const Circuit& other);

  void reserve(std::size_t n) { gates_.reserve(n); }

  /// Widens the register; existing gates are untouched.
  void resize(std::size_t num_qubits);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Returns a copy of `circuit` with `gate` appended.
Circuit append_gate(const Circuit& circuit, const Gate& gate);

/// Gates in reverse order. Every gate in the set is self-inverse except T/Tdg,
/// which are exchanged.
Circuit inverse(const Circuit& circuit);

struct Schedule {
  std::vector<std::vector<std::size_t>> layers;
  std::size_t depth() const { return layers.size(); }
};

/**
 * Greedy as-soon-as-possible layering in program order.
 *
 * A gate lands one layer after the latest earlier gate that shares any
 * operand with it. No commutation is exploited.
 */
Schedule asap_schedule(const Circuit& circuit);

std::size_t depth(const Circuit& circuit);

/// Per-gate duration used by `weighted_depth`. Zero-cost gates still order
/// their neighbours but add no time.
using GateCost = std::function<std::size_t(const Gate&)>;

std::size_t weighted_depth(const Circuit& circuit, const GateCost& cost);

/// Counts only multi-qubit gates; single-qubit gates cost nothing.
std::size_t multiqubit_depth(const Circuit& circuit);

/// Every gate costs 1 except SWAP, which costs `swap_cost`.
GateCost swap_weighted_cost(std::size_t swap_cost);

/**
 * Incremental ASAP depth tracker. Feeding it the gates of a circuit in order
 * yields the same value as `weighted_depth` without keeping the gates.
 */
class DepthTracker {
 public:
  explicit DepthTracker(std::size_t num_qubits, std::size_t swap_cost = 1)
      : ready_(num_qubits, 0), swap_cost_(swap_cost) {}

  void add(const Gate& gate);
  std::size_t depth() const { return depth_; }
  std::size_t gate_count() const { return gates_; }

 private:
  std::vector<std::size_t> ready_;
  std::size_t swap_cost_;
  std::size_t depth_ = 0;
  std::size_t gates_ = 0;
};

}  // namespace ntc
