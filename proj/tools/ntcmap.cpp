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

// ntcmap: generate adders and trees, embed, route, simulate, run scaling.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <stdexcept>

#include "ntcmap/adder.hpp"
#include "ntcmap/embed.hpp"
#include "ntcmap/experiments.hpp"
#include "ntcmap/io.hpp"
#include "ntcmap/lbt.hpp"
#include "ntcmap/router.hpp"
#include "ntcmap/sim.hpp"

namespace {

using namespace ntc;

constexpr int kExitInvariant = 2;

std::string sidecar_path(const std::string& out) {
  std::filesystem::path p(out);
  p.replace_extension(".layout.json");
  return p.string();
}

MeshGraph host_for(std::size_t k, const std::vector<std::size_t>& dims,
                   std::size_t needed) {
  return dims.empty() ? auto_mesh(k, needed) : mesh(k, dims);
}

Json verdict_json(const Verdict& v) {
  Json j = {{"equivalent", v.equivalent},
            {"method", v.method},
            {"inputs_checked", v.inputs_checked},
            {"deviation", v.deviation}};
  if (v.counterexample) j["counterexample"] = v.counterexample->to_string();
  if (v.expected) j["expected"] = v.expected->to_string();
  if (v.actual) j["actual"] = v.actual->to_string();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Map adder and Boolean-tree circuits onto nearest-neighbour meshes"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an adder circuit or a balanced tree");
  std::string adder, tree_kind, gen_out;
  std::size_t gen_n = 0;
  bool carry_in = false;
  auto* adder_opt = gen->add_option("--adder", adder, "cla or ripple");
  gen->add_option("--tree", tree_kind, "and, or, xor: write a balanced tree instead")
      ->excludes(adder_opt);
  gen->add_option("--n", gen_n, "Operand bits or tree leaves")->required();
  gen->add_flag("--carry-in", carry_in, "Allocate an input carry");
  gen->add_option("--out", gen_out, "Output file")->required();

  // embed
  auto* emb = app.add_subcommand("embed", "Embed a tree into a mesh");
  std::string guest, strategy = "recursive_bisection", emb_out;
  std::size_t emb_k = 1;
  std::vector<std::size_t> emb_dims;
  emb->add_option("--guest", guest, "Tree JSON")->required();
  emb->add_option("--k", emb_k, "Mesh dimension");
  emb->add_option("--dims", emb_dims, "Mesh extents")->delimiter(',');
  emb->add_option("--strategy", strategy, "inorder_line or recursive_bisection");
  emb->add_option("--out", emb_out, "Embedding JSON");

  // route
  auto* rt = app.add_subcommand("route", "Route a circuit onto a mesh");
  std::string rt_in, rt_out, placement = "identity_snake", mode = "swap";
  std::size_t rt_k = 1;
  std::vector<std::size_t> rt_dims;
  bool decompose = false;
  rt->add_option("--circuit", rt_in, "Circuit JSON")->required();
  rt->add_option("--k", rt_k, "Mesh dimension");
  rt->add_option("--dims", rt_dims, "Mesh extents (default: smallest fitting mesh)")
      ->delimiter(',');
  rt->add_option("--placement", placement, "identity_snake or interaction_bisection");
  rt->add_option("--mode", mode, "swap or chain");
  rt->add_flag("--decompose", decompose, "Decompose CCNOT gates first");
  rt->add_option("--out", rt_out, "Routed circuit JSON");

  // sim
  auto* sm = app.add_subcommand("sim", "Simulate or compare circuits");
  std::string sim_circuit, sim_input, sim_unitary, sim_against;
  auto* sim_c = sm->add_option("--circuit", sim_circuit, "Classical circuit JSON");
  sm->add_option("--input", sim_input, "Input bit string, qubit 0 first")->needs(sim_c);
  auto* sim_u = sm->add_option("--unitary", sim_unitary, "Circuit JSON to compare");
  sm->add_option("--check-against", sim_against, "Reference circuit JSON")->needs(sim_u);

  // scale
  auto* sc = app.add_subcommand("scale", "Depth scaling sweep");
  std::size_t sc_k = 1;
  std::vector<std::size_t> sc_n{8, 16, 32, 64, 128};
  std::string sc_adder = "cla", sc_place = "identity_snake", sc_mode = "swap", sc_out;
  std::uint64_t seed = 7;
  sc->add_option("--k", sc_k, "Mesh dimension");
  sc->add_option("--n", sc_n, "Operand widths")->delimiter(',');
  sc->add_option("--adder", sc_adder, "cla or ripple");
  sc->add_option("--placement", sc_place, "identity_snake or interaction_bisection");
  sc->add_option("--mode", sc_mode, "swap or chain");
  sc->add_option("--seed", seed, "Verification seed");
  sc->add_option("--out", sc_out, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      if (!tree_kind.empty()) {
        write_json(gen_out, tree_to_json(balanced_tree(gen_n, lbt_kind_from_name(tree_kind))));
        return 0;
      }
      if (adder.empty()) throw std::invalid_argument("gen needs --adder or --tree");
      const auto [c, layout] = gen_adder(adder_from_name(adder), gen_n, {carry_in});
      write_json(gen_out, circuit_to_json(c));
      write_json(sidecar_path(gen_out), layout_to_json(layout));
      return 0;
    }

    if (emb->parsed()) {
      const auto tree = tree_from_json(read_json(guest));
      const MeshGraph host = host_for(emb_k, emb_dims, tree.nodes.size());
      const Embedding e = embed_tree(tree, host, embed_strategy_from_name(strategy));
      if (!emb_out.empty()) write_json(emb_out, embedding_to_json(e));
      Json record = metrics_to_json(measure_metrics(e));
      record["dims"] = host.dims();
      record["lower_bound"] = dilation_lower_bound(tree, host).to_string();
      std::cout << record.dump() << '\n';
      return 0;
    }

    if (rt->parsed()) {
      Circuit c = circuit_from_json(read_json(rt_in));
      if (decompose) c = decompose_ccnot(c);
      const MeshGraph host = host_for(rt_k, rt_dims, c.num_qubits());
      const Placement start = place(c, host, placement_from_name(placement));
      const RoutedCircuit r = route(c, host, start, route_mode_from_name(mode));
      if (!rt_out.empty()) write_json(rt_out, circuit_to_json(r.circuit));
      const Json record = {{"dims", host.dims()},
                           {"swap_count", r.swap_count},
                           {"depth_before", depth(c)},
                           {"depth_after", depth(r.circuit)},
                           {"placement", r.placement.sites()},
                           {"permutation", r.final_permutation}};
      std::cout << record.dump() << '\n';
      return 0;
    }

    if (sm->parsed()) {
      if (!sim_circuit.empty()) {
        const Circuit c = circuit_from_json(read_json(sim_circuit));
        std::cout << simulate_classical(c, BitState::from_string(sim_input)).to_string()
                  << '\n';
        return 0;
      }
      if (sim_against.empty()) throw std::invalid_argument("sim needs --circuit or --unitary with --check-against");
      const Circuit cand = circuit_from_json(read_json(sim_unitary));
      const Circuit ref = circuit_from_json(read_json(sim_against));
      const Verdict v = assert_equivalent(ref, cand);
      std::cout << verdict_json(v).dump() << '\n';
      return v.equivalent ? 0 : 1;
    }

    if (sc->parsed()) {
      std::vector<MetricsRecord> records;
      try {
        records = run_scaling(sc_k, sc_n, adder_from_name(sc_adder),
                              placement_from_name(sc_place),
                              route_mode_from_name(sc_mode), seed);
      } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
      }
      std::vector<NamedFit> fits;
      if (records.size() >= 3) {
        fits.push_back({"depth_ac", fit_exponent(records, "depth_ac")});
        fits.push_back({"depth_ntc", fit_exponent(records, "depth_ntc")});
      }
      report(records, fits, sc_out);
      std::cout << to_csv(records);
      const auto problems = invariant_violations(records);
      for (const auto& p : problems) std::cerr << "invariant violation: " << p << '\n';
      return problems.empty() ? 0 : kExitInvariant;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
