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

#include "ntcmap/router.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ntc {

std::string_view placement_name(PlacementStrategy s) {
  return s == PlacementStrategy::IdentitySnake ? "identity_snake"
                                               : "interaction_bisection";
}

PlacementStrategy placement_from_name(std::string_view name) {
  if (name == "identity_snake" || name == "snake") {
    return PlacementStrategy::IdentitySnake;
  }
  if (name == "interaction_bisection" || name == "bisection") {
    return PlacementStrategy::InteractionBisection;
  }
  throw std::invalid_argument("unknown placement '" + std::string(name) + "'");
}

std::string_view route_mode_name(RouteMode m) {
  return m == RouteMode::Swap ? "swap" : "cnot_chain";
}

RouteMode route_mode_from_name(std::string_view name) {
  if (name == "swap") return RouteMode::Swap;
  if (name == "cnot_chain" || name == "chain") return RouteMode::CnotChain;
  throw std::invalid_argument("unknown route mode '" + std::string(name) + "'");
}

namespace {

// Flat coordinate table; avoids allocating a Coord per distance query.
class SiteTable {
 public:
  explicit SiteTable(const MeshGraph& mesh) : k_(mesh.k()) {
    strides_.assign(k_, 1);
    for (std::size_t d = k_ - 1; d-- > 0;) {
      strides_[d] = strides_[d + 1] * static_cast<std::uint32_t>(mesh.dims()[d + 1]);
    }
    coords_.resize(mesh.node_count() * k_);
    for (Site s = 0; s < mesh.node_count(); ++s) {
      std::uint32_t rest = s;
      for (std::size_t d = 0; d < k_; ++d) {
        coords_[s * k_ + d] = rest / strides_[d];
        rest %= strides_[d];
      }
    }
  }

  std::size_t k() const { return k_; }
  std::uint32_t at(Site s, std::size_t d) const { return coords_[s * k_ + d]; }

  std::size_t distance(Site a, Site b) const {
    std::size_t sum = 0;
    for (std::size_t d = 0; d < k_; ++d) {
      const auto x = at(a, d), y = at(b, d);
      sum += x > y ? x - y : y - x;
    }
    return sum;
  }

  // Lowest differing dimension moves first, matching MeshGraph::step_toward.
  Site step(Site from, Site to) const {
    for (std::size_t d = 0; d < k_; ++d) {
      const auto x = at(from, d), y = at(to, d);
      if (x < y) return from + strides_[d];
      if (x > y) return from - strides_[d];
    }
    return from;
  }

 private:
  std::size_t k_;
  std::vector<std::uint32_t> strides_;
  std::vector<std::uint32_t> coords_;
};

using WeightedAdjacency = std::vector<std::vector<std::pair<Qubit, std::uint32_t>>>;

WeightedAdjacency interaction_graph(const Circuit& circuit) {
  std::vector<std::unordered_map<Qubit, std::uint32_t>> maps(circuit.num_qubits());
  for (const Gate& g : circuit) {
    for (unsigned i = 0; i < g.arity(); ++i) {
      for (unsigned j = i + 1; j < g.arity(); ++j) {
        ++maps[g[i]][g[j]];
        ++maps[g[j]][g[i]];
      }
    }
  }
  WeightedAdjacency adj(maps.size());
  for (std::size_t q = 0; q < maps.size(); ++q) {
    adj[q].assign(maps[q].begin(), maps[q].end());
    std::sort(adj[q].begin(), adj[q].end());
  }
  return adj;
}

class Bisector {
 public:
  Bisector(const WeightedAdjacency& adj, const SiteTable& table,
           std::vector<Site>& out)
      : adj_(adj), table_(table), out_(out), side_(adj.size(), kOutside),
        gain_(adj.size(), 0) {}

  void run(std::vector<Qubit> qubits, std::vector<Site> sites) {
    if (qubits.empty()) return;
    if (sites.size() == 1) {
      out_[qubits.front()] = sites.front();
      return;
    }
    split_sites(sites);
    const std::size_t half = (sites.size() + 1) / 2;
    std::vector<Site> lower(sites.begin(), sites.begin() + static_cast<long>(half));
    std::vector<Site> upper(sites.begin() + static_cast<long>(half), sites.end());

    // qubit share proportional to site share, rounded, within capacity
    std::size_t want = (qubits.size() * lower.size() + sites.size() / 2) / sites.size();
    want = std::clamp(want, qubits.size() > upper.size() ? qubits.size() - upper.size() : 0,
                      std::min(lower.size(), qubits.size()));
    std::vector<Qubit> left(qubits.begin(), qubits.begin() + static_cast<long>(want));
    std::vector<Qubit> right(qubits.begin() + static_cast<long>(want), qubits.end());
    refine(left, right);
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    run(std::move(left), std::move(lower));
    run(std::move(right), std::move(upper));
  }

 private:
  static constexpr std::int8_t kOutside = -1;

  void split_sites(std::vector<Site>& sites) const {
    std::size_t axis = 0, best = 0;
    for (std::size_t d = 0; d < table_.k(); ++d) {
      std::uint32_t lo = UINT32_MAX, hi = 0;
      for (Site s : sites) {
        lo = std::min(lo, table_.at(s, d));
        hi = std::max(hi, table_.at(s, d));
      }
      if (hi - lo > best) {
        best = hi - lo;
        axis = d;
      }
    }
    std::sort(sites.begin(), sites.end(), [&](Site a, Site b) {
      const auto ca = table_.at(a, axis), cb = table_.at(b, axis);
      return ca != cb ? ca < cb : a < b;
    });
  }

  long recompute_gain(Qubit v) const {
    long g = 0;
    for (auto [u, w] : adj_[v]) {
      if (side_[u] == kOutside) continue;
      g += side_[u] != side_[v] ? static_cast<long>(w) : -static_cast<long>(w);
    }
    return g;
  }

  long weight(Qubit a, Qubit b) const {
    const auto& row = adj_[a];
    auto it = std::lower_bound(row.begin(), row.end(),
                               std::make_pair(b, std::uint32_t{0}));
    return it != row.end() && it->first == b ? it->second : 0;
  }

  // Kernighan-Lin style passes: swap the best-gain pair candidates while the
  // cut weight strictly drops.
  void refine(std::vector<Qubit>& left, std::vector<Qubit>& right) {
    if (left.empty() || right.empty()) return;
    for (Qubit q : left) side_[q] = 0;
    for (Qubit q : right) side_[q] = 1;
    for (int pass = 0; pass < 8; ++pass) {
      for (Qubit q : left) gain_[q] = recompute_gain(q);
      for (Qubit q : right) gain_[q] = recompute_gain(q);
      auto by_gain = [this](Qubit a, Qubit b) {
        return gain_[a] != gain_[b] ? gain_[a] > gain_[b] : a < b;
      };
      std::sort(left.begin(), left.end(), by_gain);
      std::sort(right.begin(), right.end(), by_gain);
      bool improved = false;
      const std::size_t pairs = std::min(left.size(), right.size());
      for (std::size_t i = 0; i < pairs; ++i) {
        const Qubit a = left[i], b = right[i];
        if (gain_[a] + gain_[b] - 2 * weight(a, b) <= 0) break;
        std::swap(left[i], right[i]);
        side_[a] = 1;
        side_[b] = 0;
        for (Qubit v : {a, b}) {
          gain_[v] = recompute_gain(v);
          for (auto [u, w] : adj_[v]) {
            if (side_[u] != kOutside) gain_[u] = recompute_gain(u);
          }
        }
        improved = true;
      }
      if (!improved) break;
    }
    for (Qubit q : left) side_[q] = kOutside;
    for (Qubit q : right) side_[q] = kOutside;
  }

  const WeightedAdjacency& adj_;
  const SiteTable& table_;
  std::vector<Site>& out_;
  std::vector<std::int8_t> side_;
  std::vector<long> gain_;
};

}  // namespace

Placement place(const Circuit& circuit, const MeshGraph& mesh,
                PlacementStrategy strategy) {
  const std::size_t n = circuit.num_qubits();
  if (n > mesh.node_count()) {
    throw std::invalid_argument("place: mesh " + mesh.dims_string() + " has " +
                                std::to_string(mesh.node_count()) +
                                " sites for " + std::to_string(n) + " qubits");
  }
  std::vector<Site> sites(n);
  if (strategy == PlacementStrategy::IdentitySnake) {
    const auto snake = mesh.snake_order();
    std::copy_n(snake.begin(), n, sites.begin());
  } else {
    const SiteTable table(mesh);
    const WeightedAdjacency adj = interaction_graph(circuit);
    std::vector<Qubit> qubits(n);
    for (Qubit q = 0; q < n; ++q) qubits[q] = q;
    std::vector<Site> all(mesh.node_count());
    for (Site s = 0; s < all.size(); ++s) all[s] = s;
    Bisector(adj, table, sites).run(std::move(qubits), std::move(all));
  }
  return Placement(std::move(sites), mesh.node_count());
}

Circuit decompose_ccnot(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  out.reserve(circuit.size());
  for (const Gate& g : circuit) {
    if (g.kind() != GateKind::CCNOT) {
      out.append(g);
      continue;
    }
    const Qubit a = g[0], b = g[1], c = g[2];
    out.append(Gate::h(c));
    out.append(Gate::cnot(b, c));
    out.append(Gate::tdg(c));
    out.append(Gate::cnot(a, c));
    out.append(Gate::t(c));
    out.append(Gate::cnot(b, c));
    out.append(Gate::tdg(c));
    out.append(Gate::cnot(a, c));
    out.append(Gate::t(b));
    out.append(Gate::t(c));
    out.append(Gate::h(c));
    out.append(Gate::cnot(a, b));
    out.append(Gate::t(a));
    out.append(Gate::tdg(b));
    out.append(Gate::cnot(a, b));
  }
  return out;
}

namespace {

// CNOT(v.front(), v.back()) from nearest-neighbour CNOTs along path v.
void emit_chain(const std::vector<Qubit>& v, const GateSink& emit) {
  const std::size_t d = v.size() - 1;
  for (std::size_t k = 0; k < d; ++k) emit(Gate::cnot(v[k], v[k + 1]));
  for (std::size_t k = d - 1; k-- > 0;) emit(Gate::cnot(v[k], v[k + 1]));
  for (std::size_t k = 1; k < d; ++k) emit(Gate::cnot(v[k], v[k + 1]));
  for (std::size_t k = d - 1; k-- > 1;) emit(Gate::cnot(v[k], v[k + 1]));
}

}  // namespace

RouteSummary route_into(const Circuit& circuit, const MeshGraph& mesh,
                        const Placement& placement, RouteMode mode,
                        const GateSink& sink) {
  if (placement.size() < circuit.num_qubits()) {
    throw std::invalid_argument("route: placement incomplete, qubit " +
                                std::to_string(placement.size()) +
                                " has no site");
  }
  if (placement.mesh_nodes() != mesh.node_count()) {
    throw std::invalid_argument("route: placement is for another mesh");
  }
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    if (circuit[i].arity() > 2) {
      throw std::invalid_argument("route: unsupported gate kind " +
                                  std::string(gate_name(circuit[i].kind())) +
                                  " at gate " + std::to_string(i));
    }
  }

  RouteSummary out;
  out.placement = placement.completed();
  out.width = mesh.node_count();
  const SiteTable table(mesh);
  const auto& site_of = out.placement.sites();
  std::vector<Qubit> wire_at(out.width);
  for (Qubit w = 0; w < out.width; ++w) wire_at[site_of[w]] = w;
  std::vector<Qubit> loc(out.width), holder(out.width);
  for (Qubit q = 0; q < out.width; ++q) loc[q] = holder[q] = q;

  auto emit = [&](const Gate& g) {
    ++out.gate_count;
    sink(g);
  };

  std::vector<Qubit> path;
  auto path_between = [&](Qubit from, Qubit to) {
    path.clear();
    Site s = site_of[from];
    const Site goal = site_of[to];
    path.push_back(from);
    while (s != goal) {
      s = table.step(s, goal);
      path.push_back(wire_at[s]);
    }
  };

  const Schedule schedule = asap_schedule(circuit);
  for (const auto& layer : schedule.layers) {
    for (std::size_t index : layer) {
      const Gate& g = circuit[index];
      if (g.arity() == 1) {
        emit(Gate(g.kind(), {loc[g[0]]}));
        continue;
      }
      const Qubit a = g[0], b = g[1];
      if (mode == RouteMode::Swap) {
        while (table.distance(site_of[loc[a]], site_of[loc[b]]) > 1) {
          const Qubit from = loc[a];
          const Qubit to = wire_at[table.step(site_of[from], site_of[loc[b]])];
          emit(Gate::swap(from, to));
          const Qubit displaced = holder[to];
          holder[to] = a;
          holder[from] = displaced;
          loc[displaced] = from;
          loc[a] = to;
          ++out.swap_count;
        }
        emit(Gate(g.kind(), {loc[a], loc[b]}));
        continue;
      }
      path_between(loc[a], loc[b]);
      if (path.size() == 2) {
        emit(Gate(g.kind(), {loc[a], loc[b]}));
      } else if (g.kind() == GateKind::CNOT) {
        emit_chain(path, emit);
      } else {
        std::vector<Qubit> back(path.rbegin(), path.rend());
        emit_chain(path, emit);
        emit_chain(back, emit);
        emit_chain(path, emit);
      }
    }
  }
  out.final_permutation = std::move(loc);
  return out;
}

RoutedCircuit route(const Circuit& circuit, const MeshGraph& mesh,
                    const Placement& placement, RouteMode mode) {
  Circuit routed(mesh.node_count());
  RouteSummary s = route_into(circuit, mesh, placement, mode,
                              [&routed](const Gate& g) { routed.append(g); });
  return {std::move(routed), std::move(s.placement),
          std::move(s.final_permutation), s.swap_count};
}

Circuit padded(const Circuit& circuit, std::size_t width) {
  if (width < circuit.num_qubits()) {
    throw std::invalid_argument("padded: width below circuit width");
  }
  Circuit out = circuit;
  out.resize(width);
  return out;
}

}  // namespace ntc
