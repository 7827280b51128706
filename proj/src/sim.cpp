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

#include "ntcmap/sim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <queue>
#include <random>

namespace ntc {

BitState BitState::from_string(const std::string& text) {
  BitState s(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw std::invalid_argument("bit string may only contain 0 and 1");
    }
    s.bits_[i] = text[i] == '1';
  }
  return s;
}

std::string BitState::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

std::uint64_t BitState::read(const std::vector<Qubit>& qubits) const {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (get(qubits[i])) v |= std::uint64_t{1} << i;
  }
  return v;
}

void BitState::write(const std::vector<Qubit>& qubits, std::uint64_t value) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    set(qubits[i], (value >> i) & 1);
  }
}

bool is_classical(const Circuit& circuit) {
  return std::all_of(circuit.begin(), circuit.end(),
                     [](const Gate& g) { return is_classical(g.kind()); });
}

BitState simulate_classical(const Circuit& circuit, const BitState& input) {
  if (input.size() != circuit.num_qubits()) {
    throw std::invalid_argument("input width " + std::to_string(input.size()) +
                                " does not match circuit width " +
                                std::to_string(circuit.num_qubits()));
  }
  BitState s = input;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const Gate& g = circuit[i];
    switch (g.kind()) {
      case GateKind::X:
        s.flip(g[0]);
        break;
      case GateKind::CNOT:
        if (s.get(g[0])) s.flip(g[1]);
        break;
      case GateKind::CCNOT:
        if (s.get(g[0]) && s.get(g[1])) s.flip(g[2]);
        break;
      case GateKind::SWAP: {
        const bool a = s.get(g[0]);
        s.set(g[0], s.get(g[1]));
        s.set(g[1], a);
        break;
      }
      default:
        throw NonClassicalGate(i, g.to_string());
    }
  }
  return s;
}

void simulate_packed(const Circuit& circuit,
                     std::vector<std::uint64_t>& lanes) {
  if (lanes.size() != circuit.num_qubits()) {
    throw std::invalid_argument("lane count does not match circuit width");
  }
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const Gate& g = circuit[i];
    switch (g.kind()) {
      case GateKind::X:
        lanes[g[0]] = ~lanes[g[0]];
        break;
      case GateKind::CNOT:
        lanes[g[1]] ^= lanes[g[0]];
        break;
      case GateKind::CCNOT:
        lanes[g[2]] ^= lanes[g[0]] & lanes[g[1]];
        break;
      case GateKind::SWAP:
        std::swap(lanes[g[0]], lanes[g[1]]);
        break;
      default:
        throw NonClassicalGate(i, g.to_string());
    }
  }
}

namespace {

using cplx = std::complex<double>;

// Image of basis index `x` under a classical gate.
std::size_t classical_image(const Gate& g, std::size_t x) {
  auto bit = [x](Qubit q) { return (x >> q) & 1; };
  switch (g.kind()) {
    case GateKind::X:
      return x ^ (std::size_t{1} << g[0]);
    case GateKind::CNOT:
      return bit(g[0]) ? x ^ (std::size_t{1} << g[1]) : x;
    case GateKind::CCNOT:
      return bit(g[0]) && bit(g[1]) ? x ^ (std::size_t{1} << g[2]) : x;
    case GateKind::SWAP:
      if (bit(g[0]) != bit(g[1])) {
        return x ^ (std::size_t{1} << g[0]) ^ (std::size_t{1} << g[1]);
      }
      return x;
    default:
      return x;
  }
}

std::array<cplx, 4> single_qubit_matrix(GateKind kind) {
  const double r = 1.0 / std::numbers::sqrt2;
  const cplx w = std::polar(1.0, std::numbers::pi / 4);
  switch (kind) {
    case GateKind::H:
      return {r, r, r, -r};
    case GateKind::T:
      return {1.0, 0.0, 0.0, w};
    case GateKind::Tdg:
      return {1.0, 0.0, 0.0, std::conj(w)};
    default:
      throw std::logic_error("not a single-qubit phase gate");
  }
}

}  // namespace

DenseUnitary::DenseUnitary(std::size_t num_qubits)
    : num_qubits_(num_qubits), dim_(std::size_t{1} << num_qubits) {
  if (num_qubits > kMaxUnitaryQubits) {
    throw std::invalid_argument("dense unitary limited to " +
                                std::to_string(kMaxUnitaryQubits) + " qubits");
  }
  entries_.assign(dim_ * dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) at(i, i) = 1.0;
}

void DenseUnitary::apply(const Gate& gate) {
  if (gate.max_qubit() >= num_qubits_) {
    throw std::out_of_range("gate outside unitary register");
  }
  if (is_classical(gate.kind())) {
    std::vector<cplx> next(entries_.size());
    for (std::size_t r = 0; r < dim_; ++r) {
      const std::size_t image = classical_image(gate, r);
      std::copy_n(entries_.begin() + r * dim_, dim_,
                  next.begin() + image * dim_);
    }
    entries_.swap(next);
    return;
  }
  const auto m = single_qubit_matrix(gate.kind());
  const std::size_t mask = std::size_t{1} << gate[0];
  for (std::size_t r0 = 0; r0 < dim_; ++r0) {
    if (r0 & mask) continue;
    const std::size_t r1 = r0 | mask;
    for (std::size_t c = 0; c < dim_; ++c) {
      const cplx a = at(r0, c);
      const cplx b = at(r1, c);
      at(r0, c) = m[0] * a + m[1] * b;
      at(r1, c) = m[2] * a + m[3] * b;
    }
  }
}

double DenseUnitary::unitarity_error() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      cplx sum = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) {
        sum += std::conj(at(k, i)) * at(k, j);
      }
      if (i == j) sum -= 1.0;
      worst = std::max(worst, std::abs(sum));
    }
  }
  return worst;
}

DenseUnitary simulate_unitary(const Circuit& circuit) {
  DenseUnitary u(circuit.num_qubits());
  for (const Gate& g : circuit) u.apply(g);
  return u;
}

double max_deviation(const DenseUnitary& a, const DenseUnitary& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      worst = std::max(worst, std::abs(a.at(r, c) - b.at(r, c)));
    }
  }
  return worst;
}

namespace {

struct PackedTerm {
  std::vector<std::uint64_t> words;
  std::complex<double> amplitude;
};

bool bit_of(const std::vector<std::uint64_t>& w, Qubit q) {
  return (w[q >> 6] >> (q & 63)) & 1;
}

void flip_bit(std::vector<std::uint64_t>& w, Qubit q) {
  w[q >> 6] ^= std::uint64_t{1} << (q & 63);
}

// Topological order of the gate dependency DAG. Ready gates that cannot grow
// the superposition (anything but an H on a qubit with even H parity) go
// first, lowest index first.
std::vector<std::size_t> sparse_order(const Circuit& circuit) {
  const std::size_t m = circuit.size();
  std::vector<std::vector<std::size_t>> succ(m);
  std::vector<std::size_t> indegree(m, 0);
  std::vector<std::size_t> last(circuit.num_qubits(), SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    for (Qubit q : circuit[i].qubits()) {
      if (last[q] != SIZE_MAX) {
        succ[last[q]].push_back(i);
        ++indegree[i];
      }
      last[q] = i;
    }
  }
  using MinHeap = std::priority_queue<std::size_t, std::vector<std::size_t>,
                                      std::greater<>>;
  MinHeap calm, opening;
  std::vector<bool> parity(circuit.num_qubits(), false);
  auto make_ready = [&](std::size_t i) {
    const Gate& g = circuit[i];
    if (g.kind() == GateKind::H && !parity[g[0]]) {
      opening.push(i);
    } else {
      calm.push(i);
    }
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (indegree[i] == 0) make_ready(i);
  }
  std::vector<std::size_t> order;
  order.reserve(m);
  while (!calm.empty() || !opening.empty()) {
    MinHeap& from = calm.empty() ? opening : calm;
    const std::size_t i = from.top();
    from.pop();
    order.push_back(i);
    if (circuit[i].kind() == GateKind::H) parity[circuit[i][0]] = !parity[circuit[i][0]];
    for (std::size_t j : succ[i]) {
      if (--indegree[j] == 0) make_ready(j);
    }
  }
  return order;
}

std::vector<PackedTerm> run_sparse(const Circuit& circuit,
                                   const std::vector<std::size_t>& order,
                                   const BitState& input, std::size_t max_terms) {
  if (input.size() != circuit.num_qubits()) {
    throw std::invalid_argument("input width " + std::to_string(input.size()) +
                                " != circuit width " +
                                std::to_string(circuit.num_qubits()));
  }
  PackedTerm start{std::vector<std::uint64_t>((input.size() + 63) / 64, 0), 1.0};
  for (std::size_t q = 0; q < input.size(); ++q) {
    if (input.get(q)) flip_bit(start.words, static_cast<Qubit>(q));
  }
  std::vector<PackedTerm> terms{std::move(start)};
  const std::complex<double> omega = std::polar(1.0, std::numbers::pi / 4);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

  for (std::size_t index : order) {
    const Gate& g = circuit[index];
    switch (g.kind()) {
      case GateKind::X:
        for (auto& t : terms) flip_bit(t.words, g[0]);
        break;
      case GateKind::CNOT:
        for (auto& t : terms) {
          if (bit_of(t.words, g[0])) flip_bit(t.words, g[1]);
        }
        break;
      case GateKind::CCNOT:
        for (auto& t : terms) {
          if (bit_of(t.words, g[0]) && bit_of(t.words, g[1])) flip_bit(t.words, g[2]);
        }
        break;
      case GateKind::SWAP:
        for (auto& t : terms) {
          if (bit_of(t.words, g[0]) != bit_of(t.words, g[1])) {
            flip_bit(t.words, g[0]);
            flip_bit(t.words, g[1]);
          }
        }
        break;
      case GateKind::T:
      case GateKind::Tdg: {
        const auto phase = g.kind() == GateKind::T ? omega : std::conj(omega);
        for (auto& t : terms) {
          if (bit_of(t.words, g[0])) t.amplitude *= phase;
        }
        break;
      }
      case GateKind::H: {
        std::vector<PackedTerm> next;
        next.reserve(terms.size() * 2);
        for (auto& t : terms) {
          const bool one = bit_of(t.words, g[0]);
          PackedTerm zero_part{t.words, t.amplitude * inv_sqrt2};
          if (one) flip_bit(zero_part.words, g[0]);
          PackedTerm one_part{zero_part.words, (one ? -inv_sqrt2 : inv_sqrt2) * t.amplitude};
          flip_bit(one_part.words, g[0]);
          next.push_back(std::move(zero_part));
          next.push_back(std::move(one_part));
        }
        std::sort(next.begin(), next.end(), [](const PackedTerm& a, const PackedTerm& b) {
          return a.words < b.words;
        });
        terms.clear();
        for (auto& t : next) {
          if (!terms.empty() && terms.back().words == t.words) {
            terms.back().amplitude += t.amplitude;
          } else {
            terms.push_back(std::move(t));
          }
        }
        std::erase_if(terms, [](const PackedTerm& t) { return std::abs(t.amplitude) < 1e-12; });
        if (terms.size() > max_terms) {
          throw std::runtime_error("sparse simulation exceeded " +
                                   std::to_string(max_terms) + " terms");
        }
        break;
      }
    }
  }
  return terms;
}

BitState unpack(const std::vector<std::uint64_t>& words, std::size_t width) {
  BitState s(width);
  for (std::size_t q = 0; q < width; ++q) s.set(q, bit_of(words, static_cast<Qubit>(q)));
  return s;
}

}  // namespace

std::vector<SparseTerm> simulate_sparse(const Circuit& circuit,
                                        const BitState& input,
                                        std::size_t max_terms) {
  std::vector<SparseTerm> out;
  for (auto& t : run_sparse(circuit, sparse_order(circuit), input, max_terms)) {
    out.push_back({unpack(t.words, circuit.num_qubits()), t.amplitude});
  }
  return out;
}

namespace {

std::vector<Qubit> resolve_permutation(const EquivalenceOptions& options,
                                       std::size_t width) {
  if (options.permutation.empty()) {
    std::vector<Qubit> id(width);
    for (Qubit q = 0; q < width; ++q) id[q] = q;
    return id;
  }
  if (options.permutation.size() != width) {
    throw std::invalid_argument("permutation must cover every qubit");
  }
  std::vector<bool> seen(width, false);
  for (Qubit q : options.permutation) {
    if (q >= width || seen[q]) {
      throw std::invalid_argument("permutation is not a bijection");
    }
    seen[q] = true;
  }
  return options.permutation;
}

BitState lane_state(const std::vector<std::uint64_t>& lanes, unsigned lane) {
  BitState s(lanes.size());
  for (std::size_t q = 0; q < lanes.size(); ++q) s.set(q, (lanes[q] >> lane) & 1);
  return s;
}

Verdict classical_check(const Circuit& a, const Circuit& b,
                        const std::vector<Qubit>& perm,
                        const EquivalenceOptions& options) {
  const std::size_t width = a.num_qubits();
  std::vector<Qubit> free;
  if (options.free_inputs) {
    free = *options.free_inputs;
    for (Qubit q : free) {
      if (q >= width) throw std::invalid_argument("free input out of range");
    }
  } else {
    for (Qubit q = 0; q < width; ++q) free.push_back(q);
  }

  Verdict v;
  const bool exhaustive = free.size() <= options.exhaustive_limit;
  v.method = exhaustive ? "exhaustive" : "sampled";
  const std::uint64_t total = exhaustive ? (std::uint64_t{1} << free.size())
                                         : options.samples;
  std::mt19937_64 rng(options.seed);

  for (std::uint64_t base = 0; base < total; base += 64) {
    const unsigned lanes_used =
        static_cast<unsigned>(std::min<std::uint64_t>(64, total - base));
    const std::uint64_t lane_mask =
        lanes_used == 64 ? ~std::uint64_t{0}
                         : (std::uint64_t{1} << lanes_used) - 1;
    std::vector<std::uint64_t> in(width, 0);
    for (std::size_t i = 0; i < free.size(); ++i) {
      std::uint64_t word = 0;
      if (exhaustive) {
        for (unsigned l = 0; l < lanes_used; ++l) {
          word |= (((base + l) >> i) & 1) << l;
        }
      } else {
        word = rng();
      }
      in[free[i]] = word & lane_mask;
    }
    std::vector<std::uint64_t> out_a = in;
    std::vector<std::uint64_t> out_b = in;
    simulate_packed(a, out_a);
    simulate_packed(b, out_b);
    std::uint64_t bad = 0;
    for (std::size_t q = 0; q < width; ++q) {
      bad |= (out_a[q] ^ out_b[perm[q]]) & lane_mask;
    }
    v.inputs_checked += lanes_used;
    if (bad) {
      const unsigned lane = static_cast<unsigned>(__builtin_ctzll(bad));
      v.equivalent = false;
      v.counterexample = lane_state(in, lane);
      v.expected = lane_state(out_a, lane);
      // report the candidate in the reference's qubit order
      BitState actual(width);
      for (std::size_t q = 0; q < width; ++q) {
        actual.set(q, (out_b[perm[q]] >> lane) & 1);
      }
      v.actual = actual;
      return v;
    }
  }
  return v;
}

Verdict unitary_check(const Circuit& a, const Circuit& b,
                      const std::vector<Qubit>& perm,
                      const EquivalenceOptions& options) {
  const DenseUnitary ua = simulate_unitary(a);
  const DenseUnitary ub = simulate_unitary(b);
  const std::size_t dim = ua.dim();
  auto permute = [&](std::size_t x) {
    std::size_t y = 0;
    for (std::size_t q = 0; q < perm.size(); ++q) {
      if ((x >> q) & 1) y |= std::size_t{1} << perm[q];
    }
    return y;
  };
  Verdict v;
  v.method = "unitary";
  v.inputs_checked = dim;
  for (std::size_t r = 0; r < dim; ++r) {
    const std::size_t pr = permute(r);
    for (std::size_t c = 0; c < dim; ++c) {
      v.deviation = std::max(v.deviation, std::abs(ua.at(r, c) - ub.at(pr, c)));
    }
  }
  v.equivalent = v.deviation <= options.tolerance;
  return v;
}

Verdict sparse_check(const Circuit& a, const Circuit& b,
                     const std::vector<Qubit>& perm,
                     const EquivalenceOptions& options) {
  const std::size_t width = a.num_qubits();
  std::vector<Qubit> free;
  if (options.free_inputs) {
    free = *options.free_inputs;
    for (Qubit q : free) {
      if (q >= width) throw std::invalid_argument("free input out of range");
    }
  } else {
    for (Qubit q = 0; q < width; ++q) free.push_back(q);
  }
  Verdict v;
  const bool exhaustive = free.size() <= options.exhaustive_limit;
  v.method = "sparse";
  const std::uint64_t total = exhaustive ? (std::uint64_t{1} << free.size())
                                         : options.samples;
  const auto order = sparse_order(b);
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t x = 0; x < total; ++x) {
    BitState in(width);
    const std::uint64_t bits = exhaustive ? x : 0;
    for (std::size_t i = 0; i < free.size(); ++i) {
      const bool on = exhaustive ? (bits >> i) & 1 : (rng() & 1);
      in.set(free[i], on);
    }
    const BitState want = simulate_classical(a, in);
    const auto terms = run_sparse(b, order, in, 1 << 16);
    ++v.inputs_checked;
    BitState got(width);
    double dev = 1.0;
    if (terms.size() == 1) {
      const BitState raw = unpack(terms[0].words, width);
      for (std::size_t q = 0; q < width; ++q) got.set(q, raw.get(perm[q]));
      dev = std::abs(std::abs(terms[0].amplitude) - 1.0);
    }
    v.deviation = std::max(v.deviation, dev);
    if (terms.size() != 1 || dev > options.tolerance || !(got == want)) {
      v.equivalent = false;
      v.counterexample = in;
      v.expected = want;
      if (terms.size() == 1) v.actual = got;
      return v;
    }
  }
  return v;
}

}  // namespace

Verdict assert_equivalent(const Circuit& reference, const Circuit& candidate,
                          const EquivalenceOptions& options) {
  if (reference.num_qubits() != candidate.num_qubits()) {
    throw std::invalid_argument("width mismatch: " +
                                std::to_string(reference.num_qubits()) +
                                " vs " + std::to_string(candidate.num_qubits()));
  }
  const auto perm = resolve_permutation(options, reference.num_qubits());
  if (is_classical(reference) && is_classical(candidate)) {
    return classical_check(reference, candidate, perm, options);
  }
  if (reference.num_qubits() <= options.unitary_limit) {
    return unitary_check(reference, candidate, perm, options);
  }
  if (is_classical(reference)) {
    return sparse_check(reference, candidate, perm, options);
  }
  throw std::invalid_argument(
      "non-classical circuits wider than the unitary limit cannot be compared");
}

}  // namespace ntc
