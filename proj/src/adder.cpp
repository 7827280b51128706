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

#include "ntcmap/adder.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace ntc {

std::string_view adder_name(AdderKind kind) {
  return kind == AdderKind::Cla ? "cla" : "ripple";
}

AdderKind adder_from_name(std::string_view name) {
  if (name == "cla") return AdderKind::Cla;
  if (name == "ripple") return AdderKind::Ripple;
  throw std::invalid_argument("unknown adder '" + std::string(name) + "'");
}

namespace {

constexpr int kCarryInLeaf = -1;

// One block of the carry tree for a single carry.
struct Block {
  int lo = -1;  // child covering the less significant half
  int hi = -1;  // child covering the more significant half
  int leaf = 0;  // bit index for leaves, kCarryInLeaf for c_0
  bool need_p = false;
  std::size_t height = 1;
  Qubit g = 0;  // generate copy (leaf) or block-generate ancilla
  Qubit p = 0;  // propagate copy or block-propagate ancilla, if need_p
};

struct CarryPlan {
  std::vector<Block> blocks;  // blocks[0] is the root
  std::vector<int> bfs;       // block indices in BFS order
};

// Balanced combine tree over `leaves` (ascending significance).
CarryPlan plan_carry(const std::vector<int>& leaves) {
  CarryPlan plan;
  auto build = [&plan, &leaves](auto&& self, std::size_t from,
                                std::size_t to) -> int {
    const int me = static_cast<int>(plan.blocks.size());
    plan.blocks.push_back({});
    if (to - from == 1) {
      plan.blocks[me].leaf = leaves[from];
      return me;
    }
    const std::size_t mid = from + (to - from + 1) / 2;
    const int lo = self(self, from, mid);
    const int hi = self(self, mid, to);
    plan.blocks[me].lo = lo;
    plan.blocks[me].hi = hi;
    plan.blocks[me].height =
        1 + std::max(plan.blocks[lo].height, plan.blocks[hi].height);
    return me;
  };
  build(build, 0, leaves.size());

  // A block's propagate is read when it is the high half of a combine, or
  // when its parent's propagate is itself needed.
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int b = queue.front();
    queue.pop_front();
    plan.bfs.push_back(b);
    Block& blk = plan.blocks[b];
    if (blk.lo >= 0) {
      plan.blocks[blk.hi].need_p = true;
      plan.blocks[blk.lo].need_p = blk.need_p;
      queue.push_back(blk.lo);
      queue.push_back(blk.hi);
    }
  }
  return plan;
}

LogDepthBinaryTree carry_tree(const CarryPlan& plan) {
  std::vector<NodeId> id(plan.blocks.size());
  for (std::size_t i = 0; i < plan.bfs.size(); ++i) {
    id[plan.bfs[i]] = static_cast<NodeId>(i);
  }
  LogDepthBinaryTree tree;
  tree.root = 0;
  tree.nodes.resize(plan.blocks.size());
  for (std::size_t b = 0; b < plan.blocks.size(); ++b) {
    const Block& blk = plan.blocks[b];
    LbtNode& node = tree.nodes[id[b]];
    node.id = id[b];
    node.output_qubit = blk.g;
    if (blk.lo >= 0) {
      node.kind = LbtKind::Or;
      node.children = {id[blk.hi], id[blk.lo]};
    }
  }
  return tree;
}

void check_width(std::size_t n) {
  if (n == 0) throw std::invalid_argument("adder width must be >= 1");
}

}  // namespace

AdderCircuit gen_cla(std::size_t n, const AdderOptions& options) {
  check_width(n);
  AdderLayout layout;
  layout.n = n;
  Qubit next = 0;
  std::vector<Qubit> p(n), g(n);
  for (std::size_t i = 0; i < n; ++i) {
    layout.a.push_back(next++);
    layout.b.push_back(next++);
    p[i] = next++;
    g[i] = next++;
    layout.sum.push_back(next++);
  }
  if (options.carry_in) layout.carry_in = next++;
  layout.carry_out = next++;
  for (std::size_t i = 0; i < n; ++i) {
    layout.ancillae.push_back(p[i]);
    layout.ancillae.push_back(g[i]);
  }

  // Inventory pass: plan every carry tree, then hand out private copies.
  // copies_g[j] / copies_p[j] list the fanout targets of g_j / p_j.
  std::vector<std::vector<Qubit>> copies_g(n), copies_p(n);
  std::vector<Qubit> copies_c0;
  std::vector<CarryPlan> plans;
  plans.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> leaves;
    if (options.carry_in) leaves.push_back(kCarryInLeaf);
    for (std::size_t j = 0; j <= i; ++j) leaves.push_back(static_cast<int>(j));
    CarryPlan plan = plan_carry(leaves);
    // leaves first, in significance order, then internal blocks in BFS order
    std::vector<int> leaf_blocks;
    for (int b : plan.bfs) {
      if (plan.blocks[b].lo < 0) leaf_blocks.push_back(b);
    }
    std::sort(leaf_blocks.begin(), leaf_blocks.end(), [&](int x, int y) {
      return plan.blocks[x].leaf < plan.blocks[y].leaf;
    });
    for (int b : leaf_blocks) {
      Block& blk = plan.blocks[b];
      blk.g = next++;
      layout.fanout_region.push_back(blk.g);
      if (blk.leaf == kCarryInLeaf) {
        copies_c0.push_back(blk.g);
        continue;
      }
      copies_g[blk.leaf].push_back(blk.g);
      if (blk.need_p) {
        blk.p = next++;
        layout.fanout_region.push_back(blk.p);
        copies_p[blk.leaf].push_back(blk.p);
      }
    }
    for (int b : plan.bfs) {
      Block& blk = plan.blocks[b];
      if (blk.lo < 0) continue;
      blk.g = next++;
      layout.ancillae.push_back(blk.g);
      if (blk.need_p) {
        blk.p = next++;
        layout.ancillae.push_back(blk.p);
      }
    }
    plans.push_back(std::move(plan));
  }
  layout.num_qubits = next;

  Circuit c(layout.num_qubits);
  // 1. propagate and generate, all positions at once
  for (std::size_t i = 0; i < n; ++i) {
    c.append(Gate::ccnot(layout.a[i], layout.b[i], g[i]));
    c.append(Gate::cnot(layout.a[i], p[i]));
    c.append(Gate::cnot(layout.b[i], p[i]));
  }
  // 2. fanout
  auto fan = [&c](Qubit source, const std::vector<Qubit>& targets) {
    if (targets.empty()) return;
    const Circuit tree = fanout_tree(targets.size() + 1);
    for (const Gate& gate : tree) {
      const Qubit from = gate[0] == 0 ? source : targets[gate[0] - 1];
      c.append(Gate::cnot(from, targets[gate[1] - 1]));
    }
  };
  if (layout.carry_in) fan(*layout.carry_in, copies_c0);
  for (std::size_t j = 0; j < n; ++j) {
    fan(g[j], copies_g[j]);
    fan(p[j], copies_p[j]);
  }
  // 3. carry trees, children before parents
  for (const CarryPlan& plan : plans) {
    std::vector<int> order(plan.bfs.rbegin(), plan.bfs.rend());
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return plan.blocks[x].height < plan.blocks[y].height;
    });
    for (int b : order) {
      const Block& blk = plan.blocks[b];
      if (blk.lo < 0) continue;
      const Block& lo = plan.blocks[blk.lo];
      const Block& hi = plan.blocks[blk.hi];
      c.append(Gate::cnot(hi.g, blk.g));
      if (blk.need_p) c.append(Gate::ccnot(hi.p, lo.p, blk.p));
      c.append(Gate::ccnot(hi.p, lo.g, blk.g));
    }
  }
  layout.compute_gates = c.size();

  // 4. copy-out
  for (std::size_t i = 0; i < n; ++i) {
    c.append(Gate::cnot(p[i], layout.sum[i]));
    if (i == 0) {
      if (layout.carry_in) c.append(Gate::cnot(*layout.carry_in, layout.sum[0]));
    } else {
      c.append(Gate::cnot(plans[i - 1].blocks[0].g, layout.sum[i]));
    }
  }
  c.append(Gate::cnot(plans[n - 1].blocks[0].g, layout.carry_out));
  layout.copyout_gates = c.size() - layout.compute_gates;

  for (const CarryPlan& plan : plans) layout.carry_trees.push_back(carry_tree(plan));
  return {std::move(c), std::move(layout)};
}

AdderCircuit gen_ripple(std::size_t n, const AdderOptions& options) {
  check_width(n);
  AdderLayout layout;
  layout.n = n;
  Qubit next = 0;
  std::vector<Qubit> carry(n + 1);  // carry[i] = c_i
  if (options.carry_in) {
    layout.carry_in = next++;
    carry[0] = *layout.carry_in;
  }
  for (std::size_t i = 0; i < n; ++i) {
    layout.sum.push_back(next++);
    layout.b.push_back(next++);
    layout.a.push_back(next++);
    carry[i + 1] = next++;
    layout.ancillae.push_back(carry[i + 1]);
  }
  layout.carry_out = next++;
  layout.num_qubits = next;

  Circuit c(layout.num_qubits);
  for (std::size_t i = 0; i < n; ++i) {
    c.append(Gate::ccnot(layout.a[i], layout.b[i], carry[i + 1]));
    c.append(Gate::cnot(layout.a[i], layout.b[i]));  // b_i now holds p_i
    if (i > 0 || layout.carry_in) {
      // g_i and p_i & c_i are exclusive, so XOR accumulates the OR
      c.append(Gate::ccnot(carry[i], layout.b[i], carry[i + 1]));
    }
  }
  layout.compute_gates = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    c.append(Gate::cnot(layout.b[i], layout.sum[i]));
    if (i > 0 || layout.carry_in) c.append(Gate::cnot(carry[i], layout.sum[i]));
  }
  c.append(Gate::cnot(carry[n], layout.carry_out));
  layout.copyout_gates = c.size() - layout.compute_gates;
  return {std::move(c), std::move(layout)};
}

AdderCircuit gen_adder(AdderKind kind, std::size_t n,
                       const AdderOptions& options) {
  return kind == AdderKind::Cla ? gen_cla(n, options) : gen_ripple(n, options);
}

Circuit uncompute_ancillae(const Circuit& circuit, const AdderLayout& layout) {
  if (circuit.num_qubits() != layout.num_qubits ||
      circuit.size() != layout.compute_gates + layout.copyout_gates) {
    throw std::invalid_argument("layout inconsistent with circuit");
  }
  if (layout.ancillae.empty() && layout.fanout_region.empty()) return circuit;
  Circuit out = circuit;
  out.reserve(circuit.size() + layout.compute_gates);
  for (std::size_t i = layout.compute_gates; i-- > 0;) out.append(circuit[i]);
  return out;
}

BitState adder_input(const AdderLayout& layout, std::uint64_t a,
                     std::uint64_t b, bool carry_in) {
  BitState s(layout.num_qubits);
  s.write(layout.a, a);
  s.write(layout.b, b);
  if (layout.carry_in) s.set(*layout.carry_in, carry_in);
  return s;
}

}  // namespace ntc
