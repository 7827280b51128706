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
#include <string>
#include <vector>

#include "ntcmap/circuit.hpp"
#include "ntcmap/mesh.hpp"

namespace ntc {

/// Injective map from qubit index to mesh site, with its inverse.
class Placement {
 public:
  Placement() = default;
  /// Throws std::invalid_argument if two qubits share a site or a site is
  /// outside the mesh.
  Placement(std::vector<Site> sites, std::size_t mesh_nodes);

  std::size_t size() const { return sites_.size(); }
  std::size_t mesh_nodes() const { return occupant_.size(); }
  Site site(Qubit q) const { return sites_.at(q); }
  std::optional<Qubit> occupant(Site s) const;
  const std::vector<Site>& sites() const { return sites_; }

  /// Extends the map over every mesh site: the extra qubits size()..N-1 take
  /// the unused sites in ascending order.
  Placement completed() const;

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  static constexpr Qubit kFree = ~Qubit{0};
  std::vector<Site> sites_;
  std::vector<Qubit> occupant_;
};

struct NtcViolation {
  std::size_t gate_index;
  std::size_t distance;  // 0 for arity violations
  std::string message;
};

/**
 * Checks a circuit against the neighbour-only two-qubit model under a static
 * placement: 3-qubit gates are rejected outright and every 2-qubit gate must
 * act on mesh-adjacent sites. Throws std::invalid_argument if the placement
 * does not cover the circuit.
 */
std::vector<NtcViolation> validate_ntc(const Circuit& circuit,
                                       const MeshGraph& mesh,
                                       const Placement& placement);

}  // namespace ntc
