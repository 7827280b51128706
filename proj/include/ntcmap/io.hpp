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

#include <json.hpp>
#include <string>

#include "ntcmap/adder.hpp"
#include "ntcmap/circuit.hpp"
#include "ntcmap/embed.hpp"
#include "ntcmap/lbt.hpp"

// JSON file formats. Every reader throws std::invalid_argument on malformed
// input; key order in written objects is fixed, so output is deterministic.

namespace ntc {

using Json = nlohmann::ordered_json;

// {"version":1,"num_qubits":N,"gates":[{"kind":"CNOT","qubits":[0,1]},...]}
Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

// {"root":0,"nodes":[{"id":0,"kind":"and","children":[1,2],"output_qubit":7}]}
Json tree_to_json(const LogDepthBinaryTree& t);
LogDepthBinaryTree tree_from_json(const Json& j);

// Sidecar for a generated adder: {"a":[..],"b":[..],"sum":[..],"carry_out":i,
// "ancillae":[..]} plus bookkeeping fields.
Json layout_to_json(const AdderLayout& layout);
AdderLayout layout_from_json(const Json& j);

Json metrics_to_json(const EmbeddingMetrics& m);
Json embedding_to_json(const Embedding& e);

Json read_json(const std::string& path);
/// Throws std::runtime_error if the file cannot be written.
void write_json(const std::string& path, const Json& j);

}  // namespace ntc
