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

#include "ntcmap/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "ntcmap/io.hpp"
#include "ntcmap/sim.hpp"

namespace ntc {

const char* const kCsvHeader =
    "n,k,dims,adder,placement,mode,depth_ac,depth_ntc,swap_count,"
    "qubits_total,dilation_bound,seed";

LogDepthBinaryTree carry_out_tree(const AdderLayout& layout) {
  if (!layout.carry_trees.empty()) return layout.carry_trees.back();
  // ripple: c_n <- c_{n-1} <- ... <- c_1, the carries being the ancillae
  LogDepthBinaryTree t;
  const std::size_t m = layout.ancillae.size();
  if (m == 0) throw std::invalid_argument("layout has no carry chain");
  for (std::size_t i = 0; i < m; ++i) {
    LbtNode node;
    node.id = static_cast<NodeId>(i);
    node.output_qubit = layout.ancillae[m - 1 - i];
    if (i + 1 < m) {
      node.kind = LbtKind::Or;
      node.children = {static_cast<NodeId>(i + 1)};
    }
    t.nodes.push_back(std::move(node));
  }
  t.root = 0;
  return t;
}

namespace {

void check_adder(const Circuit& c, const AdderLayout& layout, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 16; ++trial) {
    BitState in(layout.num_qubits);
    std::vector<bool> a(layout.n), b(layout.n);
    for (std::size_t i = 0; i < layout.n; ++i) {
      const std::uint64_t r = rng();
      a[i] = r & 1;
      b[i] = (r >> 1) & 1;
      in.set(layout.a[i], a[i]);
      in.set(layout.b[i], b[i]);
    }
    const BitState out = simulate_classical(c, in);
    bool carry = false;
    for (std::size_t i = 0; i < layout.n; ++i) {
      const bool s = a[i] ^ b[i] ^ carry;
      carry = (a[i] && b[i]) || (carry && (a[i] ^ b[i]));
      if (out.get(layout.sum[i]) != s) {
        throw std::logic_error("adder n=" + std::to_string(layout.n) +
                               " wrong at sum bit " + std::to_string(i));
      }
    }
    if (out.get(layout.carry_out) != carry) {
      throw std::logic_error("adder n=" + std::to_string(layout.n) +
                             " wrong carry out");
    }
  }
}

}  // namespace

ScalingInstance run_instance(std::size_t k, std::size_t n, AdderKind adder,
                             PlacementStrategy placement, RouteMode mode,
                             std::uint64_t seed) {
  const auto [circuit, layout] = gen_adder(adder, n);
  check_adder(circuit, layout, seed ^ n);

  const Circuit flat = decompose_ccnot(circuit);
  const MeshGraph host = auto_mesh(k, flat.num_qubits());
  const Placement start = place(flat, host, placement);

  ScalingInstance inst;
  MetricsRecord& r = inst.record;
  r.n = n;
  r.k = k;
  r.dims = host.dims();
  r.adder = adder;
  r.placement = placement;
  r.mode = mode;
  r.depth_ac = depth(flat);
  r.qubits_total = flat.num_qubits();
  r.seed = seed;

  DepthTracker tracker(host.node_count());
  const RouteSummary routed =
      route_into(flat, host, start, mode, [&tracker](const Gate& g) { tracker.add(g); });
  r.depth_ntc = tracker.depth();
  r.swap_count = routed.swap_count;

  const LogDepthBinaryTree tree = carry_out_tree(layout);
  inst.tree_metrics = measure_metrics(induced_embedding(tree, host, start));
  inst.tree_diameter = diameter(tree);
  inst.host_diameter = host.diameter();
  r.dilation_bound = inst.tree_diameter == 0
                         ? Rational(0, 1)
                         : Rational(inst.tree_metrics.spread, inst.tree_diameter);
  return inst;
}

std::vector<MetricsRecord> run_scaling(std::size_t k,
                                       const std::vector<std::size_t>& n_list,
                                       AdderKind adder,
                                       PlacementStrategy placement,
                                       RouteMode mode, std::uint64_t seed) {
  std::vector<MetricsRecord> out;
  for (std::size_t n : n_list) {
    out.push_back(run_instance(k, n, adder, placement, mode, seed).record);
  }
  std::sort(out.begin(), out.end(),
            [](const MetricsRecord& a, const MetricsRecord& b) { return a.n < b.n; });
  return out;
}

std::vector<std::string> invariant_violations(
    const std::vector<MetricsRecord>& records) {
  std::vector<std::string> out;
  for (const auto& r : records) {
    const std::string tag = "k=" + std::to_string(r.k) + " n=" + std::to_string(r.n);
    if (r.depth_ntc < r.depth_ac) {
      out.push_back(tag + ": depth_ntc " + std::to_string(r.depth_ntc) +
                    " < depth_ac " + std::to_string(r.depth_ac));
    }
    if (r.depth_ntc < r.dilation_bound.ceil()) {
      out.push_back(tag + ": depth_ntc " + std::to_string(r.depth_ntc) +
                    " below dilation bound " + r.dilation_bound.to_string());
    }
  }
  return out;
}

namespace {

double field_value(const MetricsRecord& r, const std::string& field) {
  if (field == "depth_ac") return static_cast<double>(r.depth_ac);
  if (field == "depth_ntc") return static_cast<double>(r.depth_ntc);
  if (field == "swap_count") return static_cast<double>(r.swap_count);
  if (field == "qubits_total") return static_cast<double>(r.qubits_total);
  throw std::invalid_argument("cannot fit field '" + field + "'");
}

}  // namespace

Fit fit_exponent(const std::vector<MetricsRecord>& records,
                 const std::string& field) {
  if (records.size() < 3) {
    throw std::invalid_argument("fit needs at least 3 records, got " +
                                std::to_string(records.size()));
  }
  std::set<std::size_t> seen;
  const MetricsRecord& first = records.front();
  std::vector<double> xs, ys;
  for (const auto& r : records) {
    if (!seen.insert(r.n).second) {
      throw std::invalid_argument("fit: repeated n=" + std::to_string(r.n));
    }
    if (r.k != first.k || r.adder != first.adder ||
        r.placement != first.placement || r.mode != first.mode) {
      throw std::invalid_argument("fit: records mix configurations");
    }
    const double y = field_value(r, field);
    if (r.n == 0 || y <= 0) {
      throw std::invalid_argument("fit: non-positive data at n=" + std::to_string(r.n));
    }
    xs.push_back(std::log2(static_cast<double>(r.n)));
    ys.push_back(std::log2(y));
  }
  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  Fit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

namespace {

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(dims[i]);
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::size_t to_count(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || s[0] == '-') {
    throw std::invalid_argument("bad count '" + s + "' in CSV");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

std::string to_csv(std::vector<MetricsRecord> records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const MetricsRecord& a, const MetricsRecord& b) {
                     return std::tie(a.k, a.n) < std::tie(b.k, b.n);
                   });
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : records) {
    out += std::to_string(r.n) + ',' + std::to_string(r.k) + ',' +
           dims_text(r.dims) + ',' + std::string(adder_name(r.adder)) + ',' +
           std::string(placement_name(r.placement)) + ',' +
           std::string(route_mode_name(r.mode)) + ',' +
           std::to_string(r.depth_ac) + ',' + std::to_string(r.depth_ntc) + ',' +
           std::to_string(r.swap_count) + ',' + std::to_string(r.qubits_total) +
           ',' + r.dilation_bound.to_string() + ',' + std::to_string(r.seed) + '\n';
  }
  return out;
}

std::vector<MetricsRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("CSV header mismatch");
  }
  std::vector<MetricsRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 12) {
      throw std::invalid_argument("CSV row has " + std::to_string(f.size()) +
                                  " fields: " + line);
    }
    MetricsRecord r;
    r.n = to_count(f[0]);
    r.k = to_count(f[1]);
    for (const auto& d : split(f[2], 'x')) r.dims.push_back(to_count(d));
    r.adder = adder_from_name(f[3]);
    r.placement = placement_from_name(f[4]);
    r.mode = route_mode_from_name(f[5]);
    r.depth_ac = to_count(f[6]);
    r.depth_ntc = to_count(f[7]);
    r.swap_count = to_count(f[8]);
    r.qubits_total = to_count(f[9]);
    r.dilation_bound = Rational::parse(f[10]);
    r.seed = to_count(f[11]);
    out.push_back(std::move(r));
  }
  return out;
}

void report(const std::vector<MetricsRecord>& records,
            const std::vector<NamedFit>& fits, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + out_dir + "': " + ec.message());

  const fs::path csv = fs::path(out_dir) / "metrics.csv";
  std::ofstream out(csv, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + csv.string() + "'");
  out << to_csv(records);
  if (!out) throw std::runtime_error("write to '" + csv.string() + "' failed");

  Json summary = {{"records", records.size()}, {"fits", Json::object()}};
  for (const auto& nf : fits) {
    summary["fits"][nf.name] = {
        {"slope", nf.fit.slope}, {"intercept", nf.fit.intercept}, {"r2", nf.fit.r2}};
  }
  write_json((fs::path(out_dir) / "summary.json").string(), summary);
}

}  // namespace ntc
