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

#include "ntcmap/embed.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ntc {

void Embedding::validate() const {
  if (node_map.size() != guest.size()) {
    throw std::invalid_argument("embedding does not map every guest node");
  }
  std::vector<bool> used(host.node_count(), false);
  for (Site s : node_map) {
    if (s >= host.node_count()) {
      throw std::invalid_argument("embedding maps outside the host");
    }
    if (used[s] && !allow_load) {
      throw std::invalid_argument("embedding is not injective at site " +
                                  std::to_string(s));
    }
    used[s] = true;
  }
}

EmbeddingMetrics measure_metrics(const Embedding& e) {
  e.validate();
  EmbeddingMetrics m;
  m.expansion = Rational(e.host.node_count(), std::max<std::size_t>(1, e.guest.size()));

  std::size_t dilation = 0;
  for (auto [u, v] : e.guest.edges()) {
    dilation = std::max(dilation, e.host.distance(e.node_map[u], e.node_map[v]));
  }
  m.dilation = std::max<std::size_t>(dilation, 1);

  std::unordered_map<Site, std::size_t> per_site;
  for (Site s : e.node_map) m.load = std::max(m.load, ++per_site[s]);

  // Max Manhattan distance: for every sign pattern over the dimensions, the
  // spread of the signed coordinate sums. The first sign is fixed to +.
  const std::size_t k = e.host.k();
  std::vector<Coord> coords;
  coords.reserve(e.node_map.size());
  for (Site s : e.node_map) coords.push_back(e.host.coord(s));
  for (std::size_t mask = 0; mask < (std::size_t{1} << (k - 1)); ++mask) {
    long long lo = std::numeric_limits<long long>::max();
    long long hi = std::numeric_limits<long long>::min();
    for (const Coord& c : coords) {
      long long sum = static_cast<long long>(c[0]);
      for (std::size_t d = 1; d < k; ++d) {
        const auto v = static_cast<long long>(c[d]);
        sum += ((mask >> (d - 1)) & 1) ? -v : v;
      }
      lo = std::min(lo, sum);
      hi = std::max(hi, sum);
    }
    if (!coords.empty()) {
      m.spread = std::max(m.spread, static_cast<std::size_t>(hi - lo));
    }
  }
  return m;
}

std::size_t diameter(const LogDepthBinaryTree& tree) {
  tree.validate();
  return diameter(tree.to_graph());
}

std::size_t diameter(const MeshGraph& host) { return host.diameter(); }

Rational dilation_lower_bound(const Graph& guest, const Graph& host) {
  const std::size_t dg = diameter(guest);
  if (dg == 0) throw std::invalid_argument("guest diameter is 0");
  return Rational(diameter(host), dg);
}

Rational dilation_lower_bound(const LogDepthBinaryTree& guest,
                              const MeshGraph& host) {
  const std::size_t dg = diameter(guest);
  if (dg == 0) throw std::invalid_argument("guest diameter is 0");
  return Rational(host.diameter(), dg);
}

std::string_view strategy_name(EmbedStrategy s) {
  return s == EmbedStrategy::InorderLine ? "inorder_line"
                                         : "recursive_bisection";
}

EmbedStrategy embed_strategy_from_name(std::string_view name) {
  if (name == "inorder_line") return EmbedStrategy::InorderLine;
  if (name == "recursive_bisection") return EmbedStrategy::RecursiveBisection;
  throw std::invalid_argument("unknown embedding strategy '" +
                              std::string(name) + "'");
}

namespace {

struct TreeView {
  std::vector<std::vector<std::size_t>> children;  // by node position
  std::vector<std::size_t> size;                   // subtree sizes
  std::size_t root = 0;
};

TreeView view_of(const LogDepthBinaryTree& tree) {
  tree.validate();
  std::unordered_map<NodeId, std::size_t> index;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) index[tree.nodes[i].id] = i;
  TreeView v;
  v.children.resize(tree.nodes.size());
  v.size.assign(tree.nodes.size(), 1);
  v.root = index.at(tree.root);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    for (NodeId c : tree.nodes[i].children) v.children[i].push_back(index.at(c));
  }
  std::vector<std::size_t> order{v.root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto c : v.children[order[i]]) order.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (auto c : v.children[*it]) v.size[*it] += v.size[c];
  }
  return v;
}

void inorder(const TreeView& v, std::size_t node, std::vector<std::size_t>& out) {
  const auto& ch = v.children[node];
  if (!ch.empty()) inorder(v, ch[0], out);
  out.push_back(node);
  if (ch.size() > 1) inorder(v, ch[1], out);
}

Site central_site(const MeshGraph& host, const std::vector<Site>& sites) {
  const std::size_t k = host.k();
  Coord lo(k, std::numeric_limits<std::size_t>::max()), hi(k, 0);
  for (Site s : sites) {
    const Coord c = host.coord(s);
    for (std::size_t d = 0; d < k; ++d) {
      lo[d] = std::min(lo[d], c[d]);
      hi[d] = std::max(hi[d], c[d]);
    }
  }
  // twice the distance to the bounding-box centre, to stay in integers
  Site best = sites.front();
  std::size_t best_cost = std::numeric_limits<std::size_t>::max();
  for (Site s : sites) {
    const Coord c = host.coord(s);
    std::size_t cost = 0;
    for (std::size_t d = 0; d < k; ++d) {
      const std::size_t twice = 2 * c[d];
      const std::size_t mid = lo[d] + hi[d];
      cost += twice > mid ? twice - mid : mid - twice;
    }
    if (cost < best_cost || (cost == best_cost && s < best)) {
      best = s;
      best_cost = cost;
    }
  }
  return best;
}

void bisect(const TreeView& v, const MeshGraph& host, std::size_t node,
            std::vector<Site> sites, std::vector<Site>& map) {
  const Site root_site = central_site(host, sites);
  map[node] = root_site;
  sites.erase(std::find(sites.begin(), sites.end(), root_site));
  const auto& ch = v.children[node];
  if (ch.empty()) return;
  if (ch.size() == 1) {
    bisect(v, host, ch[0], std::move(sites), map);
    return;
  }
  std::size_t big = ch[0], small = ch[1];
  if (v.size[small] > v.size[big]) std::swap(big, small);

  const std::size_t k = host.k();
  Coord lo(k, std::numeric_limits<std::size_t>::max()), hi(k, 0);
  for (Site s : sites) {
    const Coord c = host.coord(s);
    for (std::size_t d = 0; d < k; ++d) {
      lo[d] = std::min(lo[d], c[d]);
      hi[d] = std::max(hi[d], c[d]);
    }
  }
  std::size_t axis = 0;
  for (std::size_t d = 1; d < k; ++d) {
    if (hi[d] - lo[d] > hi[axis] - lo[axis]) axis = d;
  }
  std::stable_sort(sites.begin(), sites.end(), [&](Site a, Site b) {
    const auto ca = host.coord(a)[axis], cb = host.coord(b)[axis];
    return ca != cb ? ca < cb : a < b;
  });
  const std::size_t half = (sites.size() + 1) / 2;
  const std::size_t cut =
      std::clamp(half, v.size[big], sites.size() - v.size[small]);
  std::vector<Site> lower(sites.begin(), sites.begin() + static_cast<long>(cut));
  std::vector<Site> upper(sites.begin() + static_cast<long>(cut), sites.end());
  bisect(v, host, big, std::move(lower), map);
  bisect(v, host, small, std::move(upper), map);
}

}  // namespace

Embedding embed_tree(const LogDepthBinaryTree& tree, const MeshGraph& host,
                     EmbedStrategy strategy) {
  const TreeView v = view_of(tree);
  if (tree.nodes.size() > host.node_count()) {
    throw std::invalid_argument("host too small: " +
                                std::to_string(host.node_count()) +
                                " sites for " +
                                std::to_string(tree.nodes.size()) + " nodes");
  }
  Embedding e;
  e.guest = tree.to_graph();
  e.host = host;
  e.node_map.assign(tree.nodes.size(), 0);
  if (strategy == EmbedStrategy::InorderLine) {
    std::vector<std::size_t> order;
    inorder(v, v.root, order);
    const auto snake = host.snake_order();
    for (std::size_t i = 0; i < order.size(); ++i) e.node_map[order[i]] = snake[i];
  } else {
    std::vector<Site> all(host.node_count());
    for (Site s = 0; s < all.size(); ++s) all[s] = s;
    bisect(v, host, v.root, std::move(all), e.node_map);
  }
  e.validate();
  return e;
}

Embedding induced_embedding(const LogDepthBinaryTree& tree,
                            const MeshGraph& host, const Placement& placement) {
  tree.validate();
  Embedding e;
  e.guest = tree.to_graph();
  e.host = host;
  e.allow_load = true;
  for (const auto& n : tree.nodes) e.node_map.push_back(placement.site(n.output_qubit));
  e.validate();
  return e;
}

}  // namespace ntc
