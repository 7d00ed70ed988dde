// Copyright 2026 The QCLA Authors
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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcla/builders.hpp"
#include "qcla/circuit.hpp"

namespace qcla {

enum class SimErrorKind : std::uint8_t {
  UncomputeAssertion,
  SpentQubitUse,
  /// TemporaryAnd on a target that is not an untouched MagicA ancilla.
  MagicMisuse,
  /// Gate kind outside the classical Toffoli-level set.
  UnsupportedGate,
};

class SimulationError : public std::runtime_error {
 public:
  SimulationError(SimErrorKind kind, std::size_t gate_index, const std::string& what);

  SimErrorKind kind() const { return kind_; }
  std::size_t gate_index() const { return gate_index_; }

 private:
  SimErrorKind kind_;
  std::size_t gate_index_;
};

/// Classical bit per qubit in flat (register-table) order.
struct BasisState {
  std::vector<std::uint8_t> bits;
  /// Set by Uncompute, cleared by Reset.
  std::vector<std::uint8_t> spent;

  bool operator==(const BasisState&) const = default;
};

/// All-zero state sized for `circuit`. MagicA ancillae also start at 0: at
/// this abstraction every such qubit is first written by a TemporaryAnd.
BasisState zero_state(const Circuit& circuit);

/// Flat-indexed copy of a Toffoli-level circuit for repeated runs.
class ReversibleSimulator {
 public:
  explicit ReversibleSimulator(const Circuit& circuit);

  /// Throws SimulationError.
  BasisState run(BasisState state) const;

  std::size_t num_qubits() const { return magic_.size(); }

 private:
  struct Op {
    GateKind kind;
    std::uint8_t arity;
    std::uint32_t q[3];
  };
  std::vector<Op> ops_;
  std::vector<std::uint8_t> magic_;
};

BasisState run_basis(const Circuit& circuit, const BasisState& input);

/// Where an adder circuit keeps its operands and results, from the final
/// wire labels (flat indices).
struct AdderLayout {
  unsigned n = 0;
  bool in_place = false;
  std::vector<std::size_t> a_in, b_in;   // registers A and B
  std::vector<std::size_t> a_out, b_out;  // a_i / b_i labels (b_out empty in-place)
  std::vector<std::size_t> sum;          // s_0 .. s_n
};

/// Throws CircuitError when a required label is missing.
AdderLayout adder_layout(const Circuit& circuit);

/// Loads a and b into registers A and B of a zero state.
BasisState adder_input(const Circuit& circuit, const AdderLayout& layout, std::uint64_t a, std::uint64_t b);

struct AdderReadout {
  AdderSum sum;
  bool operands_restored = false;
  /// Every qubit outside the labelled outputs is 0 or spent.
  bool garbage_free = false;
};

AdderReadout read_adder(const AdderLayout& layout, const BasisState& state, std::uint64_t a, std::uint64_t b);

struct CheckFailure {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::string what;

  bool operator==(const CheckFailure&) const = default;
};

struct CheckReport {
  DesignId design{};
  unsigned n = 0;
  std::uint64_t total = 0;
  std::uint64_t passed = 0;
  /// Final labels sit on the documented result qubits.
  bool labels_ok = false;
  std::vector<CheckFailure> mismatches;
  std::vector<CheckFailure> assertion_failures;

  bool ok() const { return labels_ok && passed == total; }
};

/// All 2^{2n} input pairs against cla_reference. Runs in parallel; the
/// failure lists are ordered by (a, b). Throws std::invalid_argument when
/// n exceeds `bound`.
CheckReport exhaustive_check(DesignId design, unsigned n, unsigned bound = 6);

/// `count` uniformly random pairs from a 64-bit Mersenne Twister.
CheckReport random_check(DesignId design, unsigned n, std::uint64_t count, std::uint64_t seed);

}  // namespace qcla
