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

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ntcmap/circuit.hpp"

namespace ntc {

/// One classical basis state; bit i is qubit i.
class BitState {
 public:
  BitState() = default;
  explicit BitState(std::size_t width) : bits_(width, 0) {}

  /// Parses "0101..."; character i is qubit i.
  static BitState from_string(const std::string& text);
  std::string to_string() const;

  std::size_t size() const { return bits_.size(); }
  bool get(std::size_t q) const { return bits_.at(q) != 0; }
  void set(std::size_t q, bool v) { bits_.at(q) = v ? 1 : 0; }
  void flip(std::size_t q) { bits_[q] ^= 1; }

  /// Little-endian integer read from the listed qubits.
  std::uint64_t read(const std::vector<Qubit>& qubits) const;
  void write(const std::vector<Qubit>& qubits, std::uint64_t value);

  friend bool operator==(const BitState&, const BitState&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Raised when a classical simulation meets H, T or Tdg.
class NonClassicalGate : public std::runtime_error {
 public:
  NonClassicalGate(std::size_t gate_index, const std::string& gate)
      : std::runtime_error("gate " + std::to_string(gate_index) + " (" + gate +
                           ") has no classical semantics"),
        gate_index_(gate_index) {}
  std::size_t gate_index() const { return gate_index_; }

 private:
  std::size_t gate_index_;
};

BitState simulate_classical(const Circuit& circuit, const BitState& input);

/**
 * Bit-sliced classical simulation: lanes[q] carries qubit q for 64 independent
 * inputs at once. Runs in place.
 */
void simulate_packed(const Circuit& circuit, std::vector<std::uint64_t>& lanes);

bool is_classical(const Circuit& circuit);

class DenseUnitary {
 public:
  explicit DenseUnitary(std::size_t num_qubits);  // identity

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return dim_; }
  std::complex<double>& at(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const std::complex<double>& at(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  /// Left-multiplies by `gate` embedded at its operand positions.
  void apply(const Gate& gate);

  /// max |(U^dagger U - I)_ij|
  double unitarity_error() const;

 private:
  std::size_t num_qubits_;
  std::size_t dim_;
  std::vector<std::complex<double>> entries_;
};

inline constexpr std::size_t kMaxUnitaryQubits = 12;

/// Throws std::invalid_argument above kMaxUnitaryQubits.
DenseUnitary simulate_unitary(const Circuit& circuit);

/// Elementwise max |a_ij - b_ij|; the matrices must have equal size.
double max_deviation(const DenseUnitary& a, const DenseUnitary& b);

/// One basis state of a sparse state vector.
struct SparseTerm {
  BitState basis;
  std::complex<double> amplitude;
};

/**
 * Sparse state-vector simulation from a basis input, for wide circuits that
 * are classical overall but use H and T internally (e.g. decomposed
 * Toffolis). Gates run in a dependency-respecting order that defers opening
 * a new superposition until nothing else can run, which keeps the term count
 * small. Throws std::runtime_error past `max_terms` live terms.
 */
std::vector<SparseTerm> simulate_sparse(const Circuit& circuit,
                                        const BitState& input,
                                        std::size_t max_terms = 1 << 16);

struct EquivalenceOptions {
  /// Logical qubit q of the first circuit ends on qubit permutation[q] of the
  /// second. Identity when empty.
  std::vector<Qubit> permutation;
  /// Only these qubits vary over the input space; the rest start at 0.
  /// Every qubit varies when unset.
  std::optional<std::vector<Qubit>> free_inputs;
  std::size_t exhaustive_limit = 16;
  std::size_t samples = 10000;
  std::uint64_t seed = 7;
  std::size_t unitary_limit = 10;
  double tolerance = 1e-10;
};

struct Verdict {
  bool equivalent = true;
  std::string method;  // "exhaustive", "sampled", "unitary" or "sparse"
  std::size_t inputs_checked = 0;
  std::optional<BitState> counterexample;
  std::optional<BitState> expected;
  std::optional<BitState> actual;
  double deviation = 0.0;
};

/**
 * Compares two circuits of equal width, classically when both are classical
 * (exhaustive up to `exhaustive_limit` free qubits, otherwise seeded sampling)
 * and through dense unitaries otherwise. A classical reference against a
 * wide non-classical candidate is checked input by input with
 * `simulate_sparse`; every output must be a single basis state of unit
 * amplitude. Throws std::invalid_argument on a
 * width mismatch or when neither route applies.
 */
Verdict assert_equivalent(const Circuit& reference, const Circuit& candidate,
                          const EquivalenceOptions& options = {});

}  // namespace ntc
