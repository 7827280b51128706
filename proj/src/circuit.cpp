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

#include "ntcmap/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace ntc {

namespace {

constexpr std::array<std::string_view, 7> kGateNames = {
    "X", "H", "T", "Tdg", "CNOT", "CCNOT", "SWAP"};

}  // namespace

std::string_view gate_name(GateKind kind) {
  return kGateNames[static_cast<std::size_t>(kind)];
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kGateNames.size(); ++i) {
    if (kGateNames[i] == name) return static_cast<GateKind>(i);
  }
  return std::nullopt;
}

unsigned gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::T:
    case GateKind::Tdg:
      return 1;
    case GateKind::CNOT:
    case GateKind::SWAP:
      return 2;
    case GateKind::CCNOT:
      return 3;
  }
  return 0;
}

bool is_classical(GateKind kind) {
  return kind == GateKind::X || kind == GateKind::CNOT ||
         kind == GateKind::CCNOT || kind == GateKind::SWAP;
}

Gate::Gate(GateKind kind, std::initializer_list<Qubit> qubits) : kind_(kind) {
  init({qubits.begin(), qubits.size()});
}

Gate::Gate(GateKind kind, std::span<const Qubit> qubits) : kind_(kind) {
  init(qubits);
}

void Gate::init(std::span<const Qubit> qubits) {
  if (qubits.size() != gate_arity(kind_)) {
    throw std::invalid_argument(
        std::string(gate_name(kind_)) + " expects " +
        std::to_string(gate_arity(kind_)) + " qubits, got " +
        std::to_string(qubits.size()));
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw std::invalid_argument(
            std::string(gate_name(kind_)) + ": duplicate qubit " +
            std::to_string(qubits[i]));
      }
    }
    qubits_[i] = qubits[i];
  }
  arity_ = static_cast<std::uint8_t>(qubits.size());
}

Qubit Gate::max_qubit() const {
  return *std::max_element(qubits_.begin(), qubits_.begin() + arity_);
}

std::string Gate::to_string() const {
  std::string s(gate_name(kind_));
  s += '(';
  for (unsigned i = 0; i < arity_; ++i) {
    if (i) s += ',';
    s += std::to_string(qubits_[i]);
  }
  s += ')';
  return s;
}

void Circuit::append(const Gate& gate) {
  if (gate.max_qubit() >= num_qubits_) {
    throw std::out_of_range(
        gate.to_string() + ": qubit index out of range for " +
        std::to_string(num_qubits_) + "-qubit circuit");
  }
  gates_.push_back(gate);
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits_ > num_qubits_) {
    throw std::out_of_range("appended circuit is wider than the target");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void Circuit::resize(std::size_t num_qubits) {
  if (num_qubits < num_qubits_) {
    for (const Gate& g : gates_) {
      if (g.max_qubit() >= num_qubits) {
        throw std::out_of_range("cannot shrink below a used qubit");
      }
    }
  }
  num_qubits_ = num_qubits;
}

Circuit append_gate(const Circuit& circuit, const Gate& gate) {
  Circuit out = circuit;
  out.append(gate);
  return out;
}

Circuit inverse(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  out.reserve(circuit.size());
  for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
    switch (it->kind()) {
      case GateKind::T:
        out.append(Gate::tdg((*it)[0]));
        break;
      case GateKind::Tdg:
        out.append(Gate::t((*it)[0]));
        break;
      default:
        out.append(*it);
    }
  }
  return out;
}

Schedule asap_schedule(const Circuit& circuit) {
  Schedule s;
  // ready[q] = number of layers already occupied on q
  std::vector<std::size_t> ready(circuit.num_qubits(), 0);
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const Gate& g = circuit[i];
    std::size_t layer = 0;
    for (Qubit q : g.qubits()) layer = std::max(layer, ready[q]);
    if (layer == s.layers.size()) s.layers.emplace_back();
    s.layers[layer].push_back(i);
    for (Qubit q : g.qubits()) ready[q] = layer + 1;
  }
  return s;
}

std::size_t depth(const Circuit& circuit) {
  return weighted_depth(circuit, [](const Gate&) { return std::size_t{1}; });
}

std::size_t weighted_depth(const Circuit& circuit, const GateCost& cost) {
  std::vector<std::size_t> ready(circuit.num_qubits(), 0);
  std::size_t total = 0;
  for (const Gate& g : circuit) {
    std::size_t start = 0;
    for (Qubit q : g.qubits()) start = std::max(start, ready[q]);
    const std::size_t finish = start + cost(g);
    for (Qubit q : g.qubits()) ready[q] = finish;
    total = std::max(total, finish);
  }
  return total;
}

std::size_t multiqubit_depth(const Circuit& circuit) {
  return weighted_depth(circuit, [](const Gate& g) {
    return g.arity() > 1 ? std::size_t{1} : std::size_t{0};
  });
}

GateCost swap_weighted_cost(std::size_t swap_cost) {
  return [swap_cost](const Gate& g) {
    return g.kind() == GateKind::SWAP ? swap_cost : std::size_t{1};
  };
}

void DepthTracker::add(const Gate& gate) {
  std::size_t start = 0;
  for (Qubit q : gate.qubits()) start = std::max(start, ready_[q]);
  const std::size_t finish =
      start + (gate.kind() == GateKind::SWAP ? swap_cost_ : 1);
  for (Qubit q : gate.qubits()) ready_[q] = finish;
  depth_ = std::max(depth_, finish);
  ++gates_;
}

}  // namespace ntc
