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

#include <functional>
#include <string_view>
#include <vector>

#include "ntcmap/circuit.hpp"
#include "ntcmap/mesh.hpp"
#include "ntcmap/placement.hpp"

namespace ntc {

enum class PlacementStrategy { IdentitySnake, InteractionBisection };
enum class RouteMode { Swap, CnotChain };

std::string_view placement_name(PlacementStrategy s);
PlacementStrategy placement_from_name(std::string_view name);
std::string_view route_mode_name(RouteMode m);
RouteMode route_mode_from_name(std::string_view name);

/**
 * Initial placement of the circuit's qubits.
 *
 * IdentitySnake puts qubit i on the i-th site of the mesh's snake order.
 * InteractionBisection recursively halves the mesh along its longest
 * dimension and splits the qubits to match, refining each split with
 * Kernighan-Lin style swaps that lower the interaction weight crossing it.
 * Throws std::invalid_argument when the mesh is too small.
 */
Placement place(const Circuit& circuit, const MeshGraph& mesh,
                PlacementStrategy strategy);

/// Replaces every CCNOT with the 15-gate Clifford+T network
/// (6 CNOT, 7 T/Tdg, 2 H) on the same qubits.
Circuit decompose_ccnot(const Circuit& circuit);

/**
 * Result of routing. The routed circuit has one qubit per mesh site: its
 * qubit w stays pinned to site placement.site(w) for the whole circuit, so
 * every two-qubit gate in it touches adjacent sites under that single static
 * placement. Logical data moves between those qubits through inserted SWAPs;
 * final_permutation[q] names the routed qubit that ends up holding logical
 * qubit q (mesh-filling padding qubits included).
 */
struct RoutedCircuit {
  Circuit circuit;
  Placement placement;
  std::vector<Qubit> final_permutation;
  std::size_t swap_count = 0;
};

struct RouteSummary {
  std::size_t width = 0;
  std::size_t swap_count = 0;
  std::size_t gate_count = 0;
  Placement placement;
  std::vector<Qubit> final_permutation;
};

using GateSink = std::function<void(const Gate&)>;

/**
 * Routes gate by gate in ASAP-layer order (ascending index within a layer).
 *
 * Swap mode walks the first operand along the dimension-ordered shortest path
 * until it neighbours the second, applies the gate and leaves the data where
 * it is. Chain mode keeps data still and expands a distance-d CNOT into the
 * 4(d-1)-gate nearest-neighbour cascade; a distant SWAP becomes three such
 * CNOTs. Throws std::invalid_argument for CCNOT input or a placement that
 * does not cover the circuit.
 */
RoutedCircuit route(const Circuit& circuit, const MeshGraph& mesh,
                    const Placement& placement, RouteMode mode);

/// Streaming form of `route`: gates go to `sink` instead of being stored.
RouteSummary route_into(const Circuit& circuit, const MeshGraph& mesh,
                        const Placement& placement, RouteMode mode,
                        const GateSink& sink);

/// Widens `circuit` to `width` qubits (the routed register size) so it can
/// be compared against a routed circuit.
Circuit padded(const Circuit& circuit, std::size_t width);

}  // namespace ntc
