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

#include <random>
#include <vector>

#include "ntcmap/circuit.hpp"

namespace support {

// Random circuit over `width` qubits; classical-only when requested.
inline ntc::Circuit random_circuit(std::mt19937_64& rng, std::size_t width,
                                   std::size_t gates, bool classical) {
  using ntc::Gate;
  using ntc::GateKind;
  ntc::Circuit c(width);
  std::vector<GateKind> kinds{GateKind::X, GateKind::CNOT, GateKind::SWAP};
  if (width >= 3) kinds.push_back(GateKind::CCNOT);
  if (!classical) {
    kinds.insert(kinds.end(), {GateKind::H, GateKind::T, GateKind::Tdg});
  }
  std::uniform_int_distribution<std::size_t> pick_kind(0, kinds.size() - 1);
  std::vector<ntc::Qubit> qs(width);
  for (std::size_t i = 0; i < width; ++i) qs[i] = static_cast<ntc::Qubit>(i);
  while (c.size() < gates) {
    const GateKind k = kinds[pick_kind(rng)];
    const unsigned arity = ntc::gate_arity(k);
    if (arity > width) continue;
    std::shuffle(qs.begin(), qs.end(), rng);
    c.append(Gate(k, std::span<const ntc::Qubit>(qs.data(), arity)));
  }
  return c;
}

}  // namespace support
