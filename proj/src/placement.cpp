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

#include "ntcmap/placement.hpp"

#include <stdexcept>

namespace ntc {

Placement::Placement(std::vector<Site> sites, std::size_t mesh_nodes)
    : sites_(std::move(sites)), occupant_(mesh_nodes, kFree) {
  for (Qubit q = 0; q < sites_.size(); ++q) {
    const Site s = sites_[q];
    if (s >= mesh_nodes) {
      throw std::invalid_argument("placement: site " + std::to_string(s) +
                                  " is off the mesh");
    }
    if (occupant_[s] != kFree) {
      throw std::invalid_argument("placement: site " + std::to_string(s) +
                                  " assigned twice");
    }
    occupant_[s] = q;
  }
}

std::optional<Qubit> Placement::occupant(Site s) const {
  const Qubit q = occupant_.at(s);
  if (q == kFree) return std::nullopt;
  return q;
}

Placement Placement::completed() const {
  std::vector<Site> sites = sites_;
  for (Site s = 0; s < occupant_.size(); ++s) {
    if (occupant_[s] == kFree) sites.push_back(s);
  }
  return Placement(std::move(sites), occupant_.size());
}

std::vector<NtcViolation> validate_ntc(const Circuit& circuit,
                                       const MeshGraph& mesh,
                                       const Placement& placement) {
  if (placement.size() < circuit.num_qubits()) {
    throw std::invalid_argument("validate_ntc: placement is missing qubit " +
                                std::to_string(placement.size()));
  }
  if (placement.mesh_nodes() != mesh.node_count()) {
    throw std::invalid_argument("validate_ntc: placement is for another mesh");
  }
  std::vector<NtcViolation> out;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const Gate& g = circuit[i];
    if (g.arity() == 3) {
      out.push_back({i, 0, g.to_string() + ": arity 3 forbidden on NTC"});
    } else if (g.arity() == 2) {
      const auto d = mesh.distance(placement.site(g[0]), placement.site(g[1]));
      if (d != 1) {
        out.push_back({i, d,
                       g.to_string() + ": operands at distance " +
                           std::to_string(d)});
      }
    }
  }
  return out;
}

}  // namespace ntc
