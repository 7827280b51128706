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

#include <string_view>
#include <vector>

#include "ntcmap/lbt.hpp"
#include "ntcmap/mesh.hpp"
#include "ntcmap/placement.hpp"

namespace ntc {

/// Guest graph vertices mapped onto host mesh sites.
struct Embedding {
  Graph guest;
  MeshGraph host{std::vector<std::size_t>{1}};
  std::vector<Site> node_map;  // guest vertex -> host site
  bool allow_load = false;     // permit several guest vertices per site

  /// Throws std::invalid_argument if a vertex is unmapped, off the mesh, or
  /// (unless allow_load) two vertices share a site.
  void validate() const;
};

struct EmbeddingMetrics {
  std::size_t dilation = 1;
  Rational expansion;
  std::size_t load = 0;
  std::size_t spread = 0;

  friend bool operator==(const EmbeddingMetrics&,
                         const EmbeddingMetrics&) = default;
};

/// Dilation is the worst host distance across a guest edge (1 when the
/// guest has no edges); spread is the largest host distance between any two
/// images.
EmbeddingMetrics measure_metrics(const Embedding& e);

std::size_t diameter(const LogDepthBinaryTree& tree);
std::size_t diameter(const MeshGraph& host);

/// diameter(host) / diameter(guest) as an exact fraction. Throws
/// std::invalid_argument when the guest diameter is 0.
Rational dilation_lower_bound(const Graph& guest, const Graph& host);
Rational dilation_lower_bound(const LogDepthBinaryTree& guest,
                              const MeshGraph& host);

enum class EmbedStrategy { InorderLine, RecursiveBisection };

std::string_view strategy_name(EmbedStrategy s);
EmbedStrategy embed_strategy_from_name(std::string_view name);

/**
 * Embeds a tree injectively.
 *
 * InorderLine walks the tree in order and lays it along the host's snake
 * order (the plain line on a 1D host). RecursiveBisection puts each subtree
 * root at the centre of its region, cuts the remaining region along its
 * longest dimension (lowest index on ties) and sends the larger subtree to
 * the lower part, which receives at least half of the sites when capacities
 * allow. Throws std::invalid_argument when the host is too small.
 */
Embedding embed_tree(const LogDepthBinaryTree& tree, const MeshGraph& host,
                     EmbedStrategy strategy);

/// The embedding a placement induces on a tree whose nodes carry qubits.
/// Nodes sharing a qubit share a site, so load may exceed 1.
Embedding induced_embedding(const LogDepthBinaryTree& tree,
                            const MeshGraph& host, const Placement& placement);

}  // namespace ntc
