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

#include "qcla/circuit.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>

namespace qcla {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::Not: return "not";
    case GateKind::Cnot: return "cnot";
    case GateKind::Reset: return "reset";
    case GateKind::Toffoli: return "toffoli";
    case GateKind::TemporaryAnd: return "and";
    case GateKind::Uncompute: return "uncompute";
    case GateKind::H: return "h";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::Z: return "z";
    case GateKind::Cz: return "cz";
    case GateKind::MeasureX: return "measure_x";
    case GateKind::ClassicallyControlledCz: return "cc_cz";
  }
  return "?";
}

bool allowed_at(GateKind kind, Level level) {
  switch (kind) {
    case GateKind::Not:
    case GateKind::Cnot:
    case GateKind::Reset:
      return true;
    case GateKind::Toffoli:
    case GateKind::TemporaryAnd:
    case GateKind::Uncompute:
      return level == Level::Toffoli;
    default:
      return level == Level::CliffordT;
  }
}

namespace {

Gate make(GateKind kind, std::initializer_list<QubitRef> qs, std::optional<std::uint32_t> cbit = {}) {
  Gate g;
  g.kind = kind;
  g.arity = static_cast<std::uint8_t>(qs.size());
  std::copy(qs.begin(), qs.end(), g.operands.begin());
  g.cbit = cbit;
  return g;
}

}  // namespace

bool Gate::operator==(const Gate& other) const {
  if (kind != other.kind || arity != other.arity || cbit != other.cbit) return false;
  return std::equal(operands.begin(), operands.begin() + arity, other.operands.begin());
}

Gate Gate::x(QubitRef q) { return make(GateKind::Not, {q}); }
Gate Gate::cnot(QubitRef c, QubitRef t) { return make(GateKind::Cnot, {c, t}); }
Gate Gate::reset(QubitRef q) { return make(GateKind::Reset, {q}); }
Gate Gate::toffoli(QubitRef c1, QubitRef c2, QubitRef t) { return make(GateKind::Toffoli, {c1, c2, t}); }
Gate Gate::temporary_and(QubitRef c1, QubitRef c2, QubitRef t) {
  return make(GateKind::TemporaryAnd, {c1, c2, t});
}
Gate Gate::uncompute(QubitRef c1, QubitRef c2, QubitRef t) { return make(GateKind::Uncompute, {c1, c2, t}); }
Gate Gate::h(QubitRef q) { return make(GateKind::H, {q}); }
Gate Gate::t(QubitRef q) { return make(GateKind::T, {q}); }
Gate Gate::tdg(QubitRef q) { return make(GateKind::Tdg, {q}); }
Gate Gate::s(QubitRef q) { return make(GateKind::S, {q}); }
Gate Gate::sdg(QubitRef q) { return make(GateKind::Sdg, {q}); }
Gate Gate::z(QubitRef q) { return make(GateKind::Z, {q}); }
Gate Gate::cz(QubitRef a, QubitRef b) { return make(GateKind::Cz, {a, b}); }
Gate Gate::measure_x(QubitRef q, std::uint32_t cbit) { return make(GateKind::MeasureX, {q}, cbit); }
Gate Gate::classically_controlled_cz(std::uint32_t cbit, QubitRef a, QubitRef b) {
  return make(GateKind::ClassicallyControlledCz, {a, b}, cbit);
}

// ---------------------------------------------------------------------------
// WireLabel / WireNameMap

std::string WireLabel::to_string() const {
  switch (kind) {
    case Kind::A: return fmt::format("a_{}", i);
    case Kind::B: return fmt::format("b_{}", i);
    case Kind::P: return fmt::format("p[{},{}]", i, j);
    case Kind::G: return fmt::format("g[{},{}]", i, j);
    case Kind::S: return fmt::format("s_{}", i);
    case Kind::Free: return "free";
    case Kind::Spent: return "spent";
  }
  return "?";
}

namespace {

std::uint32_t parse_u32(std::string_view text, std::string_view whole) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw CircuitError(fmt::format("malformed wire label '{}'", whole));
  }
  return value;
}

}  // namespace

WireLabel WireLabel::parse(std::string_view text) {
  if (text == "free") return free();
  if (text == "spent") return spent();
  if (text.size() >= 3 && text[1] == '_') {
    std::uint32_t i = parse_u32(text.substr(2), text);
    switch (text[0]) {
      case 'a': return a(i);
      case 'b': return b(i);
      case 's': return s(i);
      default: break;
    }
  }
  if (text.size() >= 6 && (text[0] == 'p' || text[0] == 'g') && text[1] == '[' && text.back() == ']') {
    auto body = text.substr(2, text.size() - 3);
    auto comma = body.find(',');
    if (comma != std::string_view::npos) {
      std::uint32_t i = parse_u32(body.substr(0, comma), text);
      std::uint32_t j = parse_u32(body.substr(comma + 1), text);
      return text[0] == 'p' ? p(i, j) : g(i, j);
    }
  }
  throw CircuitError(fmt::format("malformed wire label '{}'", text));
}

void WireNameMap::assign(QubitRef q, WireLabel label) {
  if (label.unique()) {
    auto it = by_label_.find(label);
    if (it != by_label_.end() && it->second != q) {
      throw CircuitError(fmt::format("label {} is already live", label.to_string()));
    }
  }
  if (auto old = by_qubit_.find(q); old != by_qubit_.end() && old->second.unique()) {
    by_label_.erase(old->second);
  }
  by_qubit_[q] = label;
  if (label.unique()) by_label_[label] = q;
}

QubitRef WireNameMap::rename(WireLabel from, WireLabel to) {
  QubitRef q = at(from);
  assign(q, to);
  return q;
}

std::optional<WireLabel> WireNameMap::label_of(QubitRef q) const {
  auto it = by_qubit_.find(q);
  if (it == by_qubit_.end()) return std::nullopt;
  return it->second;
}

std::optional<QubitRef> WireNameMap::find(WireLabel label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

QubitRef WireNameMap::at(WireLabel label) const {
  auto q = find(label);
  if (!q) throw CircuitError(fmt::format("no wire holds {}", label.to_string()));
  return *q;
}

// ---------------------------------------------------------------------------
// Circuit

Circuit Circuit::create(const std::vector<RegisterSpec>& specs, Level level) {
  Circuit c;
  c.level_ = level;
  for (const auto& spec : specs) {
    if (c.find_register(spec.name)) {
      throw CircuitError(fmt::format("duplicate register name '{}'", spec.name));
    }
    Register reg;
    reg.name = spec.name;
    reg.ancilla = spec.ancilla || !spec.init.empty();
    if (spec.init.empty()) {
      reg.init.assign(spec.length, AncillaInit::Zero);
    } else if (spec.init.size() != spec.length) {
      throw CircuitError(fmt::format("register '{}' has {} init entries for {} qubits", spec.name,
                                     spec.init.size(), spec.length));
    } else {
      reg.init = spec.init;
    }
    c.registers_.push_back(std::move(reg));
  }
  return c;
}

std::size_t Circuit::num_qubits() const {
  std::size_t total = 0;
  for (const auto& r : registers_) total += r.size();
  return total;
}

std::optional<std::uint32_t> Circuit::find_register(std::string_view name) const {
  for (std::uint32_t i = 0; i < registers_.size(); ++i) {
    if (registers_[i].name == name) return i;
  }
  return std::nullopt;
}

QubitRef Circuit::qubit(std::string_view reg, std::size_t index) const {
  auto r = find_register(reg);
  if (!r) throw CircuitError(fmt::format("unknown register '{}'", reg));
  if (index >= registers_[*r].size()) {
    throw CircuitError(fmt::format("index {} out of range for register '{}'", index, reg));
  }
  return QubitRef{*r, static_cast<std::uint32_t>(index)};
}

bool Circuit::contains(QubitRef q) const {
  return q.reg < registers_.size() && q.index < registers_[q.reg].size();
}

AncillaInit Circuit::init_of(QubitRef q) const { return registers_.at(q.reg).init.at(q.index); }

bool Circuit::is_ancilla(QubitRef q) const { return registers_.at(q.reg).ancilla; }

std::string Circuit::qubit_name(QubitRef q) const {
  if (q.reg >= registers_.size()) return fmt::format("?{}[{}]", q.reg, q.index);
  return fmt::format("{}[{}]", registers_[q.reg].name, q.index);
}

std::vector<std::size_t> Circuit::register_offsets() const {
  std::vector<std::size_t> offsets;
  offsets.reserve(registers_.size());
  std::size_t total = 0;
  for (const auto& r : registers_) {
    offsets.push_back(total);
    total += r.size();
  }
  return offsets;
}

std::size_t Circuit::flat_index(QubitRef q) const {
  std::size_t offset = 0;
  for (std::uint32_t r = 0; r < q.reg; ++r) offset += registers_[r].size();
  return offset + q.index;
}

void Circuit::validate(const Gate& gate) const {
  if (!allowed_at(gate.kind, level_)) {
    throw CircuitError(fmt::format("gate '{}' is not allowed at {} level", gate_name(gate.kind),
                                   level_ == Level::Toffoli ? "Toffoli" : "Clifford+T"));
  }
  auto qs = gate.qubits();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (!contains(qs[i])) {
      throw CircuitError(fmt::format("gate '{}' operand {} does not resolve", gate_name(gate.kind),
                                     qubit_name(qs[i])));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qs[i] == qs[j]) {
        throw CircuitError(fmt::format("gate '{}' repeats operand {}", gate_name(gate.kind),
                                       qubit_name(qs[i])));
      }
    }
  }
  bool needs_cbit =
      gate.kind == GateKind::MeasureX || gate.kind == GateKind::ClassicallyControlledCz;
  if (needs_cbit != gate.cbit.has_value()) {
    throw CircuitError(fmt::format("gate '{}' has a malformed classical operand", gate_name(gate.kind)));
  }
  if (gate.cbit && *gate.cbit >= num_cbits_) {
    throw CircuitError(fmt::format("classical bit {} is not allocated", *gate.cbit));
  }
}

void Circuit::append(const Gate& gate) {
  validate(gate);
  gates_.push_back(gate);
}

void Circuit::append(std::span<const Gate> gates) {
  for (const auto& g : gates) append(g);
}

void Circuit::set_num_cbits(std::uint32_t count) {
  if (count < num_cbits_) throw CircuitError("classical bit count cannot shrink");
  num_cbits_ = count;
}

void Circuit::set_ancilla_pool(std::string_view reg) {
  auto r = find_register(reg);
  if (!r) throw CircuitError(fmt::format("unknown register '{}'", reg));
  if (!registers_[*r].ancilla) {
    throw CircuitError(fmt::format("register '{}' is not an ancilla register", reg));
  }
  pool_ = *r;
}

QubitRef Circuit::allocate_ancilla(AncillaInit init, AllocPolicy policy) {
  if (!pool_) throw CircuitError("circuit has no ancilla pool register");
  if (policy == AllocPolicy::Reuse) {
    for (auto it = freed_.begin(); it != freed_.end(); ++it) {
      if (init_of(*it) == init) {
        QubitRef q = *it;
        freed_.erase(it);
        append(Gate::reset(q));
        labels_.assign(q, WireLabel::free());
        return q;
      }
    }
  }
  auto& reg = registers_[*pool_];
  QubitRef q{*pool_, static_cast<std::uint32_t>(reg.size())};
  reg.init.push_back(init);
  labels_.assign(q, WireLabel::free());
  return q;
}

void Circuit::free_ancilla(QubitRef q) {
  if (!contains(q) || !is_ancilla(q)) {
    throw CircuitError(fmt::format("{} is not an ancilla", qubit_name(q)));
  }
  if (std::find(freed_.begin(), freed_.end(), q) != freed_.end()) {
    throw CircuitError(fmt::format("{} freed twice", qubit_name(q)));
  }
  freed_.push_back(q);
}

bool Circuit::same_structure(const Circuit& other) const {
  return level_ == other.level_ && registers_ == other.registers_ && pool_ == other.pool_ &&
         num_cbits_ == other.num_cbits_ && gates_ == other.gates_;
}

Circuit Circuit::empty_copy(Level level) const {
  Circuit c;
  c.level_ = level;
  c.registers_ = registers_;
  c.pool_ = pool_;
  c.labels_ = labels_;
  return c;
}

void Circuit::set_register_init(QubitRef q, AncillaInit init) {
  if (!contains(q)) throw CircuitError("qubit does not resolve");
  registers_[q.reg].init[q.index] = init;
}

}  // namespace qcla
