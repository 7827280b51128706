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

#include "ntcmap/mesh.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ntc {

Rational::Rational(std::uint64_t n, std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  const std::uint64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoull(text), 1);
  return Rational(std::stoull(text.substr(0, slash)),
                  std::stoull(text.substr(slash + 1)));
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<unsigned __int128>(a.num) * b.den <
         static_cast<unsigned __int128>(b.num) * a.den;
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
  adjacency.at(u).push_back(v);
  adjacency.at(v).push_back(u);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < adjacency.size(); ++u) {
    for (std::uint32_t v : adjacency[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> bfs_distances(const Graph& g, std::uint32_t source) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.size(), kUnreached);
  std::deque<std::uint32_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto v : g.adjacency[u]) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::size_t diameter(const Graph& g) {
  if (g.size() == 0) throw std::invalid_argument("diameter of empty graph");
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < g.size(); ++s) {
    for (auto d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) {
        throw std::invalid_argument("diameter of disconnected graph");
      }
      best = std::max(best, d);
    }
  }
  return best;
}

MeshGraph::MeshGraph(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("mesh needs >= 1 dimension");
  strides_.assign(dims_.size(), 1);
  for (std::size_t d = dims_.size(); d-- > 0;) {
    if (dims_[d] == 0) throw std::invalid_argument("mesh extent must be >= 1");
    strides_[d] = node_count_;
    node_count_ *= dims_[d];
  }
  if (node_count_ > std::numeric_limits<Site>::max()) {
    throw std::invalid_argument("mesh too large");
  }
}

Coord MeshGraph::coord(Site s) const {
  Coord c(dims_.size());
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    c[d] = (s / strides_[d]) % dims_[d];
  }
  return c;
}

Site MeshGraph::site(const Coord& c) const {
  std::size_t s = 0;
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    if (c.at(d) >= dims_[d]) throw std::out_of_range("coordinate off mesh");
    s += c[d] * strides_[d];
  }
  return static_cast<Site>(s);
}

std::size_t MeshGraph::distance(Site a, Site b) const {
  std::size_t total = 0;
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    const std::size_t ca = (a / strides_[d]) % dims_[d];
    const std::size_t cb = (b / strides_[d]) % dims_[d];
    total += ca > cb ? ca - cb : cb - ca;
  }
  return total;
}

std::size_t MeshGraph::diameter() const {
  std::size_t total = 0;
  for (auto e : dims_) total += e - 1;
  return total;
}

std::vector<Site> MeshGraph::neighbours(Site s) const {
  std::vector<Site> out;
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    const std::size_t c = (s / strides_[d]) % dims_[d];
    if (c > 0) out.push_back(static_cast<Site>(s - strides_[d]));
    if (c + 1 < dims_[d]) out.push_back(static_cast<Site>(s + strides_[d]));
  }
  return out;
}

Graph MeshGraph::to_graph() const {
  Graph g(node_count_);
  for (Site s = 0; s < node_count_; ++s) {
    for (Site t : neighbours(s)) {
      if (s < t) g.add_edge(s, t);
    }
  }
  return g;
}

std::vector<Site> MeshGraph::snake_order() const {
  // Reflected mixed-radix counting: dimension d runs backwards whenever the
  // coordinates already fixed in the slower dimensions sum to an odd value.
  std::vector<Site> order;
  order.reserve(node_count_);
  Coord digits(dims_.size(), 0);
  Coord c(dims_.size());
  for (std::size_t t = 0; t < node_count_; ++t) {
    std::size_t rem = t;
    for (std::size_t d = dims_.size(); d-- > 0;) {
      digits[d] = rem % dims_[d];
      rem /= dims_[d];
    }
    std::size_t parity = 0;
    for (std::size_t d = 0; d < dims_.size(); ++d) {
      c[d] = (parity % 2 == 0) ? digits[d] : dims_[d] - 1 - digits[d];
      parity += c[d];
    }
    order.push_back(site(c));
  }
  return order;
}

Site MeshGraph::step_toward(Site from, Site to) const {
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    const std::size_t cf = (from / strides_[d]) % dims_[d];
    const std::size_t ct = (to / strides_[d]) % dims_[d];
    if (cf < ct) return static_cast<Site>(from + strides_[d]);
    if (cf > ct) return static_cast<Site>(from - strides_[d]);
  }
  return from;
}

std::string MeshGraph::dims_string() const {
  std::string s;
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    if (d) s += 'x';
    s += std::to_string(dims_[d]);
  }
  return s;
}

MeshGraph mesh(std::size_t k, const std::vector<std::size_t>& dims) {
  if (k != dims.size()) {
    throw std::invalid_argument("mesh: k does not match the number of extents");
  }
  return MeshGraph(dims);
}

MeshGraph auto_mesh(std::size_t k, std::size_t nodes) {
  if (k == 0) throw std::invalid_argument("auto_mesh: k must be >= 1");
  nodes = std::max<std::size_t>(nodes, 1);
  auto power = [k](std::size_t base) {
    std::size_t p = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (p > std::numeric_limits<std::size_t>::max() / base) {
        return std::numeric_limits<std::size_t>::max();
      }
      p *= base;
    }
    return p;
  };
  std::size_t base = 1;
  while (power(base + 1) <= nodes) ++base;
  std::vector<std::size_t> dims(k, base);
  std::size_t product = power(base);
  for (std::size_t d = 0; product < nodes; ++d) {
    product = product / dims[d] * (dims[d] + 1);
    ++dims[d];
  }
  return MeshGraph(dims);
}

}  // namespace ntc
