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

#include <array>
#include <compare>
#include <deque>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcla {

class CircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Initial state of an ancilla qubit. MagicA is (|0> + e^{i pi/4}|1>)/sqrt(2).
enum class AncillaInit : std::uint8_t { Zero, MagicA };

enum class Level : std::uint8_t { Toffoli, CliffordT };

enum class AllocPolicy : std::uint8_t { Fresh, Reuse };

/// A qubit addressed by (register position in the register table, index).
struct QubitRef {
  std::uint32_t reg = 0;
  std::uint32_t index = 0;

  auto operator<=>(const QubitRef&) const = default;
};

enum class GateKind : std::uint8_t {
  // Shared by both levels.
  Not,
  Cnot,
  Reset,
  // Toffoli level only.
  Toffoli,
  TemporaryAnd,
  Uncompute,
  // Clifford+T level only.
  H,
  T,
  Tdg,
  S,
  Sdg,
  Z,
  Cz,
  MeasureX,
  ClassicallyControlledCz,
};

std::string_view gate_name(GateKind kind);
bool allowed_at(GateKind kind, Level level);

/// One gate. Operand order: controls first, target last. MeasureX and
/// ClassicallyControlledCz also carry a classical bit.
struct Gate {
  GateKind kind = GateKind::Not;
  std::array<QubitRef, 3> operands{};
  std::uint8_t arity = 0;
  std::optional<std::uint32_t> cbit;

  std::span<const QubitRef> qubits() const { return {operands.data(), arity}; }
  QubitRef target() const { return operands[arity - 1]; }

  bool operator==(const Gate& other) const;

  static Gate x(QubitRef q);
  static Gate cnot(QubitRef control, QubitRef target);
  static Gate reset(QubitRef q);
  static Gate toffoli(QubitRef c1, QubitRef c2, QubitRef target);
  static Gate temporary_and(QubitRef c1, QubitRef c2, QubitRef target);
  static Gate uncompute(QubitRef c1, QubitRef c2, QubitRef target);
  static Gate h(QubitRef q);
  static Gate t(QubitRef q);
  static Gate tdg(QubitRef q);
  static Gate s(QubitRef q);
  static Gate sdg(QubitRef q);
  static Gate z(QubitRef q);
  static Gate cz(QubitRef a, QubitRef b);
  static Gate measure_x(QubitRef q, std::uint32_t cbit);
  static Gate classically_controlled_cz(std::uint32_t cbit, QubitRef a, QubitRef b);
};

/// Semantic name of the value a wire currently holds: a_i, b_i, p[i,j],
/// g[i,j], s_i, free or spent.
struct WireLabel {
  enum class Kind : std::uint8_t { A, B, P, G, S, Free, Spent };

  Kind kind = Kind::Free;
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  static WireLabel a(std::uint32_t i) { return {Kind::A, i, 0}; }
  static WireLabel b(std::uint32_t i) { return {Kind::B, i, 0}; }
  static WireLabel p(std::uint32_t i, std::uint32_t j) { return {Kind::P, i, j}; }
  static WireLabel g(std::uint32_t i, std::uint32_t j) { return {Kind::G, i, j}; }
  static WireLabel s(std::uint32_t i) { return {Kind::S, i, 0}; }
  static WireLabel free() { return {Kind::Free, 0, 0}; }
  static WireLabel spent() { return {Kind::Spent, 0, 0}; }

  bool unique() const { return kind != Kind::Free && kind != Kind::Spent; }
  std::string to_string() const;
  static WireLabel parse(std::string_view text);

  auto operator<=>(const WireLabel&) const = default;
};

class WireNameMap {
 public:
  /// Throws CircuitError if a unique label is already held by another qubit.
  void assign(QubitRef q, WireLabel label);
  /// Moves label `from` to `to` on the same qubit.
  QubitRef rename(WireLabel from, WireLabel to);

  std::optional<WireLabel> label_of(QubitRef q) const;
  std::optional<QubitRef> find(WireLabel label) const;
  /// Like find(), but throws when the label is not live.
  QubitRef at(WireLabel label) const;

  const std::map<QubitRef, WireLabel>& entries() const { return by_qubit_; }

  bool operator==(const WireNameMap& other) const { return by_qubit_ == other.by_qubit_; }

 private:
  std::map<QubitRef, WireLabel> by_qubit_;
  std::map<WireLabel, QubitRef> by_label_;
};

struct RegisterSpec {
  std::string name;
  std::size_t length = 0;
  /// Empty for operand registers (set by the circuit input); otherwise one
  /// entry per qubit.
  std::vector<AncillaInit> init;
  bool ancilla = false;
};

struct Register {
  std::string name;
  bool ancilla = false;
  std::vector<AncillaInit> init;

  std::size_t size() const { return init.size(); }
  bool operator==(const Register&) const = default;
};

/// Ordered gate list over a table of named registers.
///
/// Gates are validated on append: operands must resolve, be pairwise
/// distinct, and the gate kind must belong to the circuit's level.
class Circuit {
 public:
  Circuit() = default;

  /// Throws CircuitError on duplicate register names or malformed init lists.
  static Circuit create(const std::vector<RegisterSpec>& registers, Level level = Level::Toffoli);

  Level level() const { return level_; }
  const std::vector<Register>& registers() const { return registers_; }
  std::span<const Gate> gates() const { return gates_; }
  std::size_t num_gates() const { return gates_.size(); }
  std::size_t num_qubits() const;
  std::uint32_t num_cbits() const { return num_cbits_; }

  std::optional<std::uint32_t> find_register(std::string_view name) const;
  QubitRef qubit(std::string_view reg, std::size_t index) const;
  bool contains(QubitRef q) const;
  AncillaInit init_of(QubitRef q) const;
  bool is_ancilla(QubitRef q) const;
  std::string qubit_name(QubitRef q) const;

  /// Position of `q` in register-table order (register 0 first).
  std::size_t flat_index(QubitRef q) const;
  /// Offsets of each register in register-table order.
  std::vector<std::size_t> register_offsets() const;

  void append(const Gate& gate);
  void append(std::span<const Gate> gates);

  std::uint32_t new_cbit() { return num_cbits_++; }
  void set_num_cbits(std::uint32_t count);

  /// Register that allocate_ancilla() grows. Must be an ancilla register.
  void set_ancilla_pool(std::string_view reg);
  std::optional<std::uint32_t> ancilla_pool() const { return pool_; }

  /// Fresh always extends the pool register. Reuse hands back the freed
  /// qubit with a matching init that has been idle longest and appends a
  /// Reset on it, falling back to Fresh when none is free. (Handing back the
  /// most recent one would chain consecutive gadgets of a round together.)
  QubitRef allocate_ancilla(AncillaInit init, AllocPolicy policy = AllocPolicy::Fresh);
  void free_ancilla(QubitRef q);

  WireNameMap& labels() { return labels_; }
  const WireNameMap& labels() const { return labels_; }

  /// Structural equality: level, register table, pool, classical bits,
  /// gate list. Labels are not compared.
  bool same_structure(const Circuit& other) const;

  /// Copy of the register table and labels with an empty gate list.
  Circuit empty_copy(Level level) const;
  void set_register_init(QubitRef q, AncillaInit init);

 private:
  void validate(const Gate& gate) const;

  Level level_ = Level::Toffoli;
  std::vector<Register> registers_;
  std::vector<Gate> gates_;
  std::uint32_t num_cbits_ = 0;
  std::optional<std::uint32_t> pool_;
  std::deque<QubitRef> freed_;  // oldest first
  WireNameMap labels_;
};

}  // namespace qcla
