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

#include "ntcmap/lbt.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

namespace ntc {

std::string_view lbt_kind_name(LbtKind kind) {
  switch (kind) {
    case LbtKind::Leaf:
      return "leaf";
    case LbtKind::And:
      return "and";
    case LbtKind::Or:
      return "or";
    case LbtKind::Xor:
      return "xor";
  }
  return "?";
}

LbtKind lbt_kind_from_name(std::string_view name) {
  for (auto k : {LbtKind::Leaf, LbtKind::And, LbtKind::Or, LbtKind::Xor}) {
    if (lbt_kind_name(k) == name) return k;
  }
  throw TreeError("unknown tree node kind '" + std::string(name) + "'");
}

namespace {

std::unordered_map<NodeId, std::size_t> index_by_id(
    const LogDepthBinaryTree& tree) {
  std::unordered_map<NodeId, std::size_t> index;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    if (!index.emplace(tree.nodes[i].id, i).second) {
      throw TreeError("duplicate node id " +
                      std::to_string(tree.nodes[i].id));
    }
  }
  return index;
}

}  // namespace

void LogDepthBinaryTree::validate() const {
  if (nodes.empty()) throw TreeError("tree has no nodes");
  const auto index = index_by_id(*this);
  std::vector<std::size_t> parents(nodes.size(), 0);
  for (const auto& n : nodes) {
    const bool leaf = n.kind == LbtKind::Leaf;
    if (leaf && !n.children.empty()) {
      throw TreeError("leaf " + std::to_string(n.id) + " has children");
    }
    if (!leaf && (n.children.empty() || n.children.size() > 2)) {
      throw TreeError("node " + std::to_string(n.id) +
                      " must have one or two children");
    }
    for (NodeId c : n.children) {
      auto it = index.find(c);
      if (it == index.end()) {
        throw TreeError("node " + std::to_string(n.id) +
                        " has dangling child " + std::to_string(c));
      }
      ++parents[it->second];
    }
  }
  auto root_it = index.find(root);
  if (root_it == index.end()) throw TreeError("root id not present");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const bool is_root = i == root_it->second;
    if (is_root && parents[i] != 0) throw TreeError("cyclic structure at root");
    if (!is_root && parents[i] == 0) {
      throw TreeError("node " + std::to_string(nodes[i].id) +
                      " is a second root");
    }
    if (parents[i] > 1) {
      throw TreeError("node " + std::to_string(nodes[i].id) +
                      " has several parents");
    }
  }
  // Every non-root node has exactly one parent, so an unreachable node can
  // only sit on a cycle.
  std::vector<bool> seen(nodes.size(), false);
  std::deque<std::size_t> queue{root_it->second};
  seen[root_it->second] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto i = queue.front();
    queue.pop_front();
    for (NodeId c : nodes[i].children) {
      const auto j = index.at(c);
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        queue.push_back(j);
      }
    }
  }
  if (reached != nodes.size()) throw TreeError("cyclic structure");
}

std::size_t LogDepthBinaryTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(),
                    [](const LbtNode& n) { return n.kind == LbtKind::Leaf; }));
}

const LbtNode& LogDepthBinaryTree::node(NodeId id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return n;
  }
  throw TreeError("no node with id " + std::to_string(id));
}

Graph LogDepthBinaryTree::to_graph() const {
  const auto index = index_by_id(*this);
  Graph g(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (NodeId c : nodes[i].children) {
      g.add_edge(static_cast<std::uint32_t>(i),
                 static_cast<std::uint32_t>(index.at(c)));
    }
  }
  return g;
}

namespace {

// Height in nodes of every node, indexed like tree.nodes.
std::vector<std::size_t> node_heights(const LogDepthBinaryTree& tree) {
  const auto index = index_by_id(tree);
  std::vector<std::size_t> height(tree.nodes.size(), 0);
  // post-order without recursion
  std::vector<std::pair<std::size_t, bool>> stack{{index.at(tree.root), false}};
  while (!stack.empty()) {
    auto [i, expanded] = stack.back();
    stack.pop_back();
    if (!expanded) {
      stack.push_back({i, true});
      for (NodeId c : tree.nodes[i].children) {
        stack.push_back({index.at(c), false});
      }
      continue;
    }
    std::size_t h = 0;
    for (NodeId c : tree.nodes[i].children) {
      h = std::max(h, height[index.at(c)]);
    }
    height[i] = h + 1;
  }
  return height;
}

}  // namespace

std::size_t tree_depth(const LogDepthBinaryTree& tree) {
  tree.validate();
  const auto h = node_heights(tree);
  return *std::max_element(h.begin(), h.end());
}

LogDepthBinaryTree balanced_tree(std::size_t n, LbtKind kind) {
  if (n == 0) throw TreeError("tree needs at least one leaf");
  if (kind == LbtKind::Leaf && n > 1) {
    throw TreeError("internal nodes cannot be leaves");
  }
  struct Shape {
    int left = -1;
    int right = -1;
    std::size_t leaf = 0;
  };
  std::vector<Shape> shape;
  // Build the shape over leaves [lo, hi) with an explicit stack.
  auto build = [&shape](auto&& self, std::size_t lo, std::size_t hi) -> int {
    const int me = static_cast<int>(shape.size());
    shape.push_back({});
    if (hi - lo == 1) {
      shape[me].leaf = lo;
      return me;
    }
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    const int l = self(self, lo, mid);
    const int r = self(self, mid, hi);
    shape[me].left = l;
    shape[me].right = r;
    return me;
  };
  build(build, 0, n);

  // BFS ids
  std::vector<NodeId> id_of(shape.size());
  std::vector<int> order;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    id_of[s] = static_cast<NodeId>(order.size());
    order.push_back(s);
    if (shape[s].left >= 0) {
      queue.push_back(shape[s].left);
      queue.push_back(shape[s].right);
    }
  }

  LogDepthBinaryTree tree;
  tree.root = 0;
  tree.nodes.resize(shape.size());
  Qubit next_ancilla = static_cast<Qubit>(n);
  for (int s : order) {
    LbtNode& node = tree.nodes[id_of[s]];
    node.id = id_of[s];
    if (shape[s].left < 0) {
      node.kind = LbtKind::Leaf;
      node.output_qubit = static_cast<Qubit>(shape[s].leaf);
    } else {
      node.kind = kind;
      node.children = {id_of[shape[s].left], id_of[shape[s].right]};
      if (kind != LbtKind::Xor) node.output_qubit = next_ancilla++;
    }
  }
  if (kind == LbtKind::Xor) {
    // In-place accumulation: a node's value lives on its right child's qubit.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      LbtNode& node = tree.nodes[id_of[*it]];
      if (node.kind != LbtKind::Leaf) {
        node.output_qubit = tree.nodes[node.children[1]].output_qubit;
      }
    }
  }
  return tree;
}

Circuit emit_circuit(const LogDepthBinaryTree& tree) {
  tree.validate();
  const auto index = index_by_id(tree);
  const auto height = node_heights(tree);

  Qubit width = 0;
  for (const auto& n : tree.nodes) width = std::max(width, n.output_qubit + 1);
  Circuit c(width);

  std::vector<std::size_t> order(tree.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (height[a] != height[b]) return height[a] < height[b];
    return tree.nodes[a].id < tree.nodes[b].id;
  });

  for (std::size_t i : order) {
    const LbtNode& n = tree.nodes[i];
    if (n.kind == LbtKind::Leaf) continue;
    const Qubit out = n.output_qubit;
    const Qubit a = tree.nodes[index.at(n.children[0])].output_qubit;
    if (n.children.size() == 1) {
      if (a != out) c.append(Gate::cnot(a, out));
      continue;
    }
    const Qubit b = tree.nodes[index.at(n.children[1])].output_qubit;
    if (a == b) {
      throw TreeError("children of node " + std::to_string(n.id) +
                      " share a qubit");
    }
    switch (n.kind) {
      case LbtKind::Xor:
        if (out == b) {
          c.append(Gate::cnot(a, out));
        } else if (out == a) {
          c.append(Gate::cnot(b, out));
        } else {
          c.append(Gate::cnot(a, out));
          c.append(Gate::cnot(b, out));
        }
        break;
      case LbtKind::And:
      case LbtKind::Or:
        if (out == a || out == b) {
          throw TreeError("node " + std::to_string(n.id) +
                          " must write a qubit distinct from its children");
        }
        if (n.kind == LbtKind::Or) {
          c.append(Gate::x(a));
          c.append(Gate::x(b));
        }
        c.append(Gate::ccnot(a, b, out));
        if (n.kind == LbtKind::Or) {
          c.append(Gate::x(out));
          c.append(Gate::x(a));
          c.append(Gate::x(b));
        }
        break;
      case LbtKind::Leaf:
        break;
    }
  }
  return c;
}

Circuit fanout_tree(std::size_t n_copies) {
  if (n_copies == 0) throw std::invalid_argument("fanout needs n_copies >= 1");
  Circuit c(n_copies);
  for (std::size_t have = 1; have < n_copies; have *= 2) {
    const std::size_t step = std::min(have, n_copies - have);
    for (std::size_t j = 0; j < step; ++j) {
      c.append(Gate::cnot(static_cast<Qubit>(j), static_cast<Qubit>(have + j)));
    }
  }
  return c;
}

BooleanCircuit parity_tree(std::size_t n) {
  if (n == 0) throw std::invalid_argument("parity needs n >= 1");
  const auto tree = balanced_tree(n, LbtKind::Xor);
  BooleanCircuit out;
  out.circuit = emit_circuit(tree);
  out.circuit.resize(n);
  for (Qubit q = 0; q < n; ++q) out.inputs.push_back(q);
  out.output = tree.node(tree.root).output_qubit;
  return out;
}

BooleanCircuit and_tree(std::size_t n, AndForm form) {
  if (n < 2) throw std::invalid_argument("AND tree needs n >= 2");
  const auto tree = balanced_tree(n, LbtKind::And);
  BooleanCircuit out;
  for (Qubit q = 0; q < n; ++q) out.inputs.push_back(q);
  for (Qubit q = static_cast<Qubit>(n); q < 2 * n - 1; ++q) {
    out.ancillae.push_back(q);
  }
  if (form == AndForm::Ccnot) {
    out.circuit = emit_circuit(tree);
    out.output = tree.node(tree.root).output_qubit;
    return out;
  }

  // Each AND result is swapped onto its left operand, so a node's value lives
  // on the qubit of its leftmost leaf.
  out.circuit = Circuit(2 * n - 1);
  const auto height = node_heights(tree);
  std::vector<std::size_t> order(tree.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (height[a] != height[b]) return height[a] < height[b];
    return a < b;
  });
  std::vector<Qubit> holder(tree.nodes.size());
  for (std::size_t i : order) {
    const LbtNode& node = tree.nodes[i];  // ids equal positions here
    if (node.kind == LbtKind::Leaf) {
      holder[i] = node.output_qubit;
      continue;
    }
    const Qubit a = holder[node.children[0]];
    const Qubit b = holder[node.children[1]];
    out.circuit.append(Gate::ccnot(a, b, node.output_qubit));
    out.circuit.append(Gate::swap(node.output_qubit, a));
    holder[i] = a;
  }
  out.output = holder[tree.root];
  return out;
}

BooleanCircuit or_tree(std::size_t n) {
  BooleanCircuit inner = and_tree(n);
  BooleanCircuit out;
  out.inputs = inner.inputs;
  out.ancillae = inner.ancillae;
  out.output = inner.output;
  out.circuit = Circuit(inner.circuit.num_qubits());
  for (Qubit q : out.inputs) out.circuit.append(Gate::x(q));
  out.circuit.append(inner.circuit);
  out.circuit.append(Gate::x(out.output));
  for (Qubit q : out.inputs) out.circuit.append(Gate::x(q));
  return out;
}

}  // namespace ntc
