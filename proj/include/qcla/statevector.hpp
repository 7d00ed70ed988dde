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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcla/circuit.hpp"
#include "qcla/reversible_sim.hpp"

namespace qcla {

enum class SvErrorKind : std::uint8_t {
  QubitCap,
  NonClassicalOutput,
  BranchLimit,
  NormDrift,
  /// FixedOutcomes list length differs from the measurement count, or asks
  /// for an outcome of zero probability.
  BadOutcomes,
  LevelMismatch,
};

class StatevectorError : public std::runtime_error {
 public:
  StatevectorError(SvErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  SvErrorKind kind() const { return kind_; }

 private:
  SvErrorKind kind_;
};

using Amplitude = std::complex<double>;

/// Dense state over q qubits. Qubit k is bit k of the amplitude index.
class StateVector {
 public:
  /// |0...0>. Throws StatevectorError(QubitCap) above `cap`.
  explicit StateVector(std::size_t num_qubits, std::size_t cap = 24);

  static StateVector basis(std::size_t num_qubits, std::uint64_t index, std::size_t cap = 24);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  std::vector<Amplitude>& amplitudes() { return amps_; }

  void x(std::size_t q);
  void h(std::size_t q);
  /// diag(1, phase) on q.
  void phase(std::size_t q, Amplitude phase);
  void cnot(std::size_t control, std::size_t target);
  void cz(std::size_t a, std::size_t b);

  /// Probability that qubit q reads 1.
  double probability_one(std::size_t q) const;
  /// Projects q onto `outcome` and renormalizes. Returns the outcome's
  /// probability before projection.
  double collapse(std::size_t q, bool outcome);

  double norm() const;

 private:
  std::size_t num_qubits_;
  std::vector<Amplitude> amps_;
};

struct MeasurementStrategy {
  enum class Kind : std::uint8_t { SeededRandom, FixedOutcomes, AllBranches };

  Kind kind = Kind::AllBranches;
  std::uint64_t seed = 42;
  std::vector<std::uint8_t> outcomes;

  /// mt19937_64; an outcome is 1 when the top 53 bits of the next draw,
  /// read as a fraction of 2^53, fall below P(1).
  static MeasurementStrategy seeded(std::uint64_t seed) { return {Kind::SeededRandom, seed, {}}; }
  static MeasurementStrategy fixed(std::vector<std::uint8_t> outcomes) {
    return {Kind::FixedOutcomes, 0, std::move(outcomes)};
  }
  static MeasurementStrategy all_branches() { return {Kind::AllBranches, 0, {}}; }
};

struct SvOptions {
  std::size_t qubit_cap = 24;
  std::size_t branch_limit = 4096;
  /// Branches below this probability (amplitude 1e-12) are dropped.
  double prune_probability = 1e-24;
  double norm_tolerance = 1e-9;
  /// Check the norm after every gate rather than only at measurements and
  /// at the end.
  bool check_norm_every_gate = true;
};

struct SvBranch {
  std::vector<std::uint8_t> cbits;
  /// Final value of every uniquely labelled wire.
  std::map<WireLabel, std::uint8_t> readout;
  double probability = 0;
};

struct SvResult {
  std::vector<SvBranch> branches;
  double total_probability = 0;
  double max_norm_error = 0;
};

/// Runs a Clifford+T circuit from a basis input (flat bits; ancilla bits
/// ignored). MagicA qubits start in (|0> + e^{i pi/4}|1>)/sqrt(2). MeasureX
/// is H followed by a Z measurement; Reset measures and flips back to 0 and
/// branches like a measurement under AllBranches and FixedOutcomes.
/// Branches are returned in depth-first order, outcome 0 first.
SvResult simulate(const Circuit& circuit, const BasisState& input, const MeasurementStrategy& strategy,
                  const SvOptions& options = {});

/// Sum read from the s_i labels of one branch.
AdderSum branch_sum(const SvBranch& branch, unsigned n);

enum class Gadget : std::uint8_t { ToffoliLowering, AndLowering, AndUncomputePair };

std::string_view gadget_name(Gadget gadget);

struct GadgetReport {
  Gadget gadget{};
  bool pass = false;
  double max_deviation = 0;
  /// Basis inputs (times branches) compared.
  int cases = 0;
};

/// Compares a lowered gadget against the ideal classical action on every
/// basis input, with one global phase fitted per measurement branch.
/// AndLowering covers both the |0>-prepared sequence and the bare body on
/// a MagicA ancilla. Pass iff every deviation is below 1e-10.
GadgetReport gadget_unitary_check(Gadget gadget);

}  // namespace qcla
