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

#include <random>

#include "ntcmap/embed.hpp"
#include "ntcmap/io.hpp"
#include "ntcmap/mesh.hpp"
#include "oracles.hpp"

namespace ntc {
namespace {

std::vector<int> as_int(const std::vector<std::size_t>& dims) {
  return {dims.begin(), dims.end()};
}

oracle::Edges as_edges(const Graph& g) {
  oracle::Edges e;
  for (auto [u, v] : g.edges()) e.push_back({static_cast<int>(u), static_cast<int>(v)});
  return e;
}

Embedding six_node_embedding() {
  const auto tree = oracle::six_node_tree();
  const auto pos = oracle::six_node_line_positions();
  Embedding e;
  e.guest = tree.to_graph();
  e.host = MeshGraph({6});
  for (const auto& n : tree.nodes) e.node_map.push_back(pos[n.id]);
  return e;
}

LogDepthBinaryTree line_tree(std::size_t n) {
  LogDepthBinaryTree t;
  for (std::size_t i = 0; i < n; ++i) {
    LbtNode node;
    node.id = static_cast<NodeId>(i);
    node.kind = i + 1 < n ? LbtKind::And : LbtKind::Leaf;
    if (i + 1 < n) node.children = {static_cast<NodeId>(i + 1)};
    t.nodes.push_back(node);
  }
  return t;
}

TEST(Mesh, Examples) {
  const MeshGraph line = mesh(1, {6});
  EXPECT_EQ(line.node_count(), 6u);
  EXPECT_EQ(line.diameter(), 5u);

  const MeshGraph sq = mesh(2, {3, 3});
  EXPECT_EQ(sq.node_count(), 9u);
  EXPECT_EQ(sq.diameter(), 4u);
  EXPECT_EQ(diameter(sq.to_graph()), 4u);

  const MeshGraph cube = mesh(3, {2, 2, 2});
  EXPECT_EQ(cube.node_count(), 8u);
  EXPECT_EQ(cube.diameter(), 3u);
}

TEST(Mesh, RejectsBadShapes) {
  EXPECT_THROW(MeshGraph({}), std::invalid_argument);
  EXPECT_THROW(MeshGraph({3, 0}), std::invalid_argument);
  EXPECT_THROW(mesh(2, {4}), std::invalid_argument);
}

TEST(Mesh, ClosedFormDiameterMatchesBfs) {
  for (const auto& dims : oracle::small_meshes(216)) {
    bool small = true;
    for (auto d : dims) small &= d <= 6;
    if (!small) continue;
    const MeshGraph m(dims);
    const auto want = oracle::graph_diameter(static_cast<int>(m.node_count()),
                                             oracle::grid_edges(as_int(dims)));
    ASSERT_EQ(m.diameter(), static_cast<std::size_t>(want)) << m.dims_string();
    ASSERT_EQ(diameter(m.to_graph()), m.diameter()) << m.dims_string();
  }
}

TEST(Mesh, EdgesMatchOracleGrid) {
  const MeshGraph m({3, 4, 2});
  auto got = as_edges(m.to_graph());
  auto want = oracle::grid_edges({3, 4, 2});
  for (auto& [u, v] : got) if (u > v) std::swap(u, v);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}

TEST(Mesh, SnakeOrderVisitsEverySiteByNeighbourSteps) {
  EXPECT_EQ(MeshGraph({2, 2}).snake_order(), (std::vector<Site>{0, 1, 3, 2}));
  for (const auto& dims : oracle::small_meshes(30)) {
    const MeshGraph m(dims);
    const auto order = m.snake_order();
    ASSERT_EQ(order.size(), m.node_count());
    std::vector<Site> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) ASSERT_EQ(sorted[i], i);
    for (std::size_t i = 1; i < order.size(); ++i)
      ASSERT_TRUE(m.adjacent(order[i - 1], order[i])) << m.dims_string() << " at " << i;
  }
}

TEST(Mesh, StepTowardShortensDistance) {
  const MeshGraph m({4, 3, 3});
  for (Site a = 0; a < m.node_count(); ++a) {
    for (Site b = 0; b < m.node_count(); ++b) {
      if (a == b) continue;
      const Site next = m.step_toward(a, b);
      ASSERT_TRUE(m.adjacent(a, next));
      ASSERT_EQ(m.distance(next, b) + 1, m.distance(a, b));
    }
  }
}

TEST(Mesh, AutoMeshIsNearlyCubicAndBigEnough) {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t q : {1u, 2u, 7u, 16u, 17u, 100u, 528u, 2048u}) {
      const MeshGraph m = auto_mesh(k, q);
      ASSERT_EQ(m.k(), k);
      EXPECT_GE(m.node_count(), q);
      const auto [lo, hi] = std::minmax_element(m.dims().begin(), m.dims().end());
      EXPECT_LE(*hi - *lo, 1u) << m.dims_string();
    }
  }
}

TEST(Diameter, TreeExamples) {
  EXPECT_EQ(diameter(balanced_tree(8, LbtKind::And)), 6u);
  EXPECT_EQ(diameter(balanced_tree(1, LbtKind::And)), 0u);
  EXPECT_EQ(diameter(line_tree(8)), 7u);
  EXPECT_EQ(diameter(MeshGraph({8})), 7u);
}

TEST(Diameter, BalancedTreesMatchBfsOracle) {
  for (std::size_t n = 1; n <= 40; ++n) {
    const auto t = balanced_tree(n, LbtKind::Or);
    const auto want = oracle::graph_diameter(static_cast<int>(t.nodes.size()),
                                             oracle::tree_edges(t));
    ASSERT_EQ(diameter(t), static_cast<std::size_t>(want)) << n;
  }
}

TEST(Diameter, DisconnectedGraphThrows) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(diameter(g), std::invalid_argument);
  EXPECT_THROW(diameter(Graph(0)), std::invalid_argument);
}

TEST(LowerBound, LbtOnALine) {
  for (std::size_t n : {8u, 16u, 32u}) {
    const auto t = balanced_tree(n, LbtKind::And);
    const Rational want(n - 1, 2 * oracle::ceil_log2(n));
    EXPECT_EQ(dilation_lower_bound(t, MeshGraph({n})), want) << n;
  }
  EXPECT_EQ(dilation_lower_bound(balanced_tree(8, LbtKind::And), MeshGraph({8})),
            Rational(7, 6));
}

TEST(LowerBound, GuestEqualsHost) {
  const Graph g = MeshGraph({3, 5}).to_graph();
  EXPECT_EQ(dilation_lower_bound(g, g), Rational(1, 1));
}

TEST(LowerBound, SixNodeShapes) {
  const auto t = oracle::six_node_tree();
  EXPECT_EQ(diameter(t), 4u);
  const Rational r = dilation_lower_bound(t, MeshGraph({6}));
  EXPECT_EQ(r, Rational(5, 4));
  EXPECT_EQ(r.ceil(), 2u);
}

TEST(LowerBound, ZeroGuestDiameterThrows) {
  EXPECT_THROW(dilation_lower_bound(balanced_tree(1, LbtKind::And), MeshGraph({4})),
               std::invalid_argument);
}

TEST(Metrics, SixNodeLineHasDilationTwo) {
  const Embedding e = six_node_embedding();
  const auto m = measure_metrics(e);
  EXPECT_EQ(m.dilation, 2u);
  EXPECT_EQ(m.load, 1u);
  EXPECT_EQ(m.expansion, Rational(1, 1));
  EXPECT_EQ(m.spread, 5u);

  // the two stretched edges are exactly (1,5) and (4,6)
  const auto tree = oracle::six_node_tree();
  std::vector<std::pair<NodeId, NodeId>> stretched;
  for (auto [u, v] : e.guest.edges()) {
    if (e.host.distance(e.node_map[u], e.node_map[v]) == 2) {
      auto a = tree.nodes[u].id, b = tree.nodes[v].id;
      stretched.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  std::sort(stretched.begin(), stretched.end());
  EXPECT_EQ(stretched, (std::vector<std::pair<NodeId, NodeId>>{{1, 5}, {4, 6}}));
}

TEST(Metrics, SingleNodeTree) {
  const auto t = balanced_tree(1, LbtKind::And);
  for (auto s : {EmbedStrategy::InorderLine, EmbedStrategy::RecursiveBisection}) {
    const auto m = measure_metrics(embed_tree(t, MeshGraph({3, 3}), s));
    EXPECT_EQ(m.dilation, 1u);
    EXPECT_EQ(m.spread, 0u);
    EXPECT_EQ(m.expansion, Rational(9, 1));
  }
}

TEST(Metrics, IdentityLine) {
  const MeshGraph line({7});
  Embedding e;
  e.guest = line.to_graph();
  e.host = line;
  for (Site s = 0; s < 7; ++s) e.node_map.push_back(s);
  const auto m = measure_metrics(e);
  EXPECT_EQ(m.dilation, 1u);
  EXPECT_EQ(m.expansion, Rational(1, 1));
  EXPECT_EQ(m.load, 1u);
}

TEST(Metrics, InorderSevenNodeTreeMatchesDirectScan) {
  const auto t = balanced_tree(4, LbtKind::And);
  ASSERT_EQ(t.nodes.size(), 7u);
  const Embedding e = embed_tree(t, MeshGraph({7}), EmbedStrategy::InorderLine);
  std::size_t want = 0;
  for (auto [u, v] : oracle::tree_edges(t)) {
    const long du = e.node_map[u], dv = e.node_map[v];
    want = std::max<std::size_t>(want, std::labs(du - dv));
  }
  EXPECT_EQ(measure_metrics(e).dilation, want);
  EXPECT_EQ(want, 2u);  // in-order puts each leaf next to its parent, siblings two apart
}

TEST(Embed, BisectionFifteenNodesOnFourByFour) {
  const auto t = balanced_tree(8, LbtKind::And);
  ASSERT_EQ(t.nodes.size(), 15u);
  const Embedding e = embed_tree(t, MeshGraph({4, 4}), EmbedStrategy::RecursiveBisection);
  EXPECT_NO_THROW(e.validate());
  EXPECT_LE(measure_metrics(e).dilation, 4u);
}

TEST(Embed, HostTooSmallThrows) {
  const auto t = balanced_tree(8, LbtKind::And);
  for (auto s : {EmbedStrategy::InorderLine, EmbedStrategy::RecursiveBisection})
    EXPECT_THROW(embed_tree(t, MeshGraph({3, 4}), s), std::invalid_argument);
}

TEST(Embed, StrategyNames) {
  EXPECT_EQ(embed_strategy_from_name("inorder_line"), EmbedStrategy::InorderLine);
  EXPECT_EQ(embed_strategy_from_name(strategy_name(EmbedStrategy::RecursiveBisection)),
            EmbedStrategy::RecursiveBisection);
  EXPECT_THROW(embed_strategy_from_name("htree"), std::invalid_argument);
}

TEST(Embed, NonInjectiveMapRejectedUnlessLoadAllowed) {
  Embedding e;
  e.guest = Graph(2);
  e.guest.add_edge(0, 1);
  e.host = MeshGraph({3});
  e.node_map = {1, 1};
  EXPECT_THROW(measure_metrics(e), std::invalid_argument);
  e.allow_load = true;
  EXPECT_EQ(measure_metrics(e).load, 2u);
  e.node_map = {1, 3};
  EXPECT_THROW(measure_metrics(e), std::invalid_argument);
}

TEST(Embed, JsonRecordCarriesMetrics) {
  const auto j = metrics_to_json(measure_metrics(six_node_embedding()));
  EXPECT_EQ(j["dilation"], 2);
  EXPECT_EQ(j["expansion"], "1/1");
}

// Over a spread of trees and hosts, both strategies yield valid embeddings
// that respect the path-stretching bound.
TEST(EmbedProperty, DilationTimesGuestDiameterCoversSpread) {
  for (std::size_t n = 2; n <= 24; ++n) {
    const auto t = balanced_tree(n, LbtKind::And);
    const std::size_t gd = diameter(t);
    for (std::size_t k = 1; k <= 3; ++k) {
      const MeshGraph host = auto_mesh(k, t.nodes.size());
      for (auto s : {EmbedStrategy::InorderLine, EmbedStrategy::RecursiveBisection}) {
        const Embedding e = embed_tree(t, host, s);
        const auto m = measure_metrics(e);
        ASSERT_GE(m.dilation * gd, m.spread) << n << " " << host.dims_string();
        ASSERT_GE(m.dilation, 1u);
        ASSERT_GE(m.expansion.value(), 1.0);
        ASSERT_EQ(m.load, 1u);
        if (m.spread == host.diameter()) {
          ASSERT_TRUE(dilation_lower_bound(t, host) <= Rational(m.dilation, 1));
        }
      }
    }
  }
}

TEST(EmbedProperty, MetricsIgnoreNodeEnumerationOrder) {
  std::mt19937 rng(11);
  const auto t = balanced_tree(11, LbtKind::And);
  const Embedding e = embed_tree(t, MeshGraph({5, 5}), EmbedStrategy::RecursiveBisection);
  const auto base = measure_metrics(e);
  for (int round = 0; round < 10; ++round) {
    std::vector<std::uint32_t> perm(t.nodes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Embedding shuffled;
    shuffled.host = e.host;
    shuffled.guest = Graph(perm.size());
    shuffled.node_map.resize(perm.size());
    for (auto [u, v] : e.guest.edges()) shuffled.guest.add_edge(perm[u], perm[v]);
    for (std::size_t i = 0; i < perm.size(); ++i) shuffled.node_map[perm[i]] = e.node_map[i];
    EXPECT_EQ(measure_metrics(shuffled), base);
  }
}

TEST(EmbedProperty, NeverBeatsExhaustiveOptimum) {
  const auto trees = oracle::all_tree_shapes(7);
  const auto hosts = oracle::small_meshes(8);
  std::size_t checked = 0;
  for (const auto& t : trees) {
    const auto guest = oracle::tree_edges(t);
    const int gn = static_cast<int>(t.nodes.size());
    for (const auto& dims : hosts) {
      const MeshGraph host(dims);
      if (host.node_count() < t.nodes.size()) continue;
      const int best = oracle::optimal_dilation(gn, guest, static_cast<int>(host.node_count()),
                                                oracle::grid_edges(as_int(dims)));
      for (auto s : {EmbedStrategy::InorderLine, EmbedStrategy::RecursiveBisection}) {
        const auto m = measure_metrics(embed_tree(t, host, s));
        ASSERT_GE(m.dilation, static_cast<std::size_t>(best)) << host.dims_string();
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

}  // namespace
}  // namespace ntc
