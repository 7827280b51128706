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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ntc {

using Site = std::uint32_t;
using Coord = std::vector<std::size_t>;

/// Exact non-negative fraction, always kept in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational() = default;
  Rational(std::uint64_t n, std::uint64_t d);

  std::uint64_t ceil() const { return (num + den - 1) / den; }
  double value() const { return static_cast<double>(num) / den; }
  std::string to_string() const;
  static Rational parse(const std::string& text);

  friend bool operator==(const Rational&, const Rational&) = default;
};

bool operator<(const Rational& a, const Rational& b);
inline bool operator<=(const Rational& a, const Rational& b) {
  return !(b < a);
}

/// Plain undirected graph on vertices 0..n-1.
struct Graph {
  std::vector<std::vector<std::uint32_t>> adjacency;

  explicit Graph(std::size_t n = 0) : adjacency(n) {}
  std::size_t size() const { return adjacency.size(); }
  void add_edge(std::uint32_t u, std::uint32_t v);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
};

/// Hop distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, std::uint32_t source);

/// Exact diameter by all-pairs BFS. Throws std::invalid_argument when the
/// graph is empty or disconnected.
std::size_t diameter(const Graph& g);

/**
 * A k-dimensional grid with nearest-neighbour edges.
 *
 * Sites are numbered row-major: the last dimension varies fastest, so on a
 * 2D mesh site = row * dims[1] + column.
 */
class MeshGraph {
 public:
  /// Throws std::invalid_argument for empty dims or a zero extent.
  explicit MeshGraph(std::vector<std::size_t> dims);

  std::size_t k() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t node_count() const { return node_count_; }

  Coord coord(Site s) const;
  Site site(const Coord& c) const;

  /// Manhattan distance, which is the hop distance on a mesh.
  std::size_t distance(Site a, Site b) const;
  bool adjacent(Site a, Site b) const { return distance(a, b) == 1; }

  /// Closed-form diameter, the sum of (extent - 1).
  std::size_t diameter() const;

  std::vector<Site> neighbours(Site s) const;
  Graph to_graph() const;

  /// Boustrophedon order: consecutive entries are adjacent sites.
  std::vector<Site> snake_order() const;

  /// Next site on the dimension-ordered shortest path from `from` to `to`
  /// (lowest differing dimension moves first).
  Site step_toward(Site from, Site to) const;

  std::string dims_string() const;

  friend bool operator==(const MeshGraph& a, const MeshGraph& b) {
    return a.dims_ == b.dims_;
  }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::size_t node_count_ = 1;
};

MeshGraph mesh(std::size_t k, const std::vector<std::size_t>& dims);

/// Smallest k-dimensional mesh with extents within one of each other that
/// holds at least `nodes` sites.
MeshGraph auto_mesh(std::size_t k, std::size_t nodes);

}  // namespace ntc
