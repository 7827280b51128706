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

#include "ntcmap/io.hpp"

#include <fstream>
#include <stdexcept>

namespace ntc {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

Json circuit_to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const Gate& g : c) {
    Json qs = Json::array();
    for (Qubit q : g.qubits()) qs.push_back(q);
    gates.push_back({{"kind", gate_name(g.kind())}, {"qubits", std::move(qs)}});
  }
  return {{"version", 1}, {"num_qubits", c.num_qubits()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const Json& j) {
  const auto version = field<int>(j, "version");
  if (version != 1) {
    throw std::invalid_argument("unsupported circuit version " + std::to_string(version));
  }
  Circuit c(field<std::size_t>(j, "num_qubits"));
  for (const Json& g : field<Json>(j, "gates")) {
    const auto name = field<std::string>(g, "kind");
    const auto kind = gate_kind_from_name(name);
    if (!kind) throw std::invalid_argument("unknown gate kind '" + name + "'");
    const auto qubits = field<std::vector<Qubit>>(g, "qubits");
    try {
      c.append(Gate(*kind, std::span<const Qubit>(qubits)));
    } catch (const std::out_of_range& e) {
      throw std::invalid_argument(e.what());
    }
  }
  return c;
}

Json tree_to_json(const LogDepthBinaryTree& t) {
  Json nodes = Json::array();
  for (const LbtNode& n : t.nodes) {
    nodes.push_back({{"id", n.id},
                     {"kind", lbt_kind_name(n.kind)},
                     {"children", n.children},
                     {"output_qubit", n.output_qubit}});
  }
  return {{"root", t.root}, {"nodes", std::move(nodes)}};
}

LogDepthBinaryTree tree_from_json(const Json& j) {
  LogDepthBinaryTree t;
  t.root = field<NodeId>(j, "root");
  for (const Json& n : field<Json>(j, "nodes")) {
    LbtNode node;
    node.id = field<NodeId>(n, "id");
    node.kind = lbt_kind_from_name(field<std::string>(n, "kind"));
    node.children = field<std::vector<NodeId>>(n, "children");
    node.output_qubit = n.contains("output_qubit") ? field<Qubit>(n, "output_qubit") : 0;
    t.nodes.push_back(std::move(node));
  }
  t.validate();
  return t;
}

Json layout_to_json(const AdderLayout& l) {
  Json j = {{"n", l.n},
            {"num_qubits", l.num_qubits},
            {"a", l.a},
            {"b", l.b},
            {"sum", l.sum},
            {"carry_out", l.carry_out},
            {"ancillae", l.ancillae},
            {"fanout_region", l.fanout_region},
            {"compute_gates", l.compute_gates},
            {"copyout_gates", l.copyout_gates}};
  if (l.carry_in) j["carry_in"] = *l.carry_in;
  return j;
}

AdderLayout layout_from_json(const Json& j) {
  AdderLayout l;
  l.a = field<std::vector<Qubit>>(j, "a");
  l.b = field<std::vector<Qubit>>(j, "b");
  l.sum = field<std::vector<Qubit>>(j, "sum");
  l.carry_out = field<Qubit>(j, "carry_out");
  l.ancillae = field<std::vector<Qubit>>(j, "ancillae");
  l.n = j.contains("n") ? field<std::size_t>(j, "n") : l.a.size();
  if (j.contains("num_qubits")) l.num_qubits = field<std::size_t>(j, "num_qubits");
  if (j.contains("fanout_region")) {
    l.fanout_region = field<std::vector<Qubit>>(j, "fanout_region");
  }
  if (j.contains("compute_gates")) l.compute_gates = field<std::size_t>(j, "compute_gates");
  if (j.contains("copyout_gates")) l.copyout_gates = field<std::size_t>(j, "copyout_gates");
  if (j.contains("carry_in")) l.carry_in = field<Qubit>(j, "carry_in");
  return l;
}

Json metrics_to_json(const EmbeddingMetrics& m) {
  return {{"dilation", m.dilation},
          {"expansion", m.expansion.to_string()},
          {"load", m.load},
          {"spread", m.spread}};
}

Json embedding_to_json(const Embedding& e) {
  return {{"dims", e.host.dims()}, {"node_map", e.node_map}};
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace ntc
