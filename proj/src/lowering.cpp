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

#include "qcla/lowering.hpp"

#include <fmt/format.h>

#include <set>

namespace qcla {

namespace {

void require_distinct(QubitRef a, QubitRef b, QubitRef c) {
  if (a == b || a == c || b == c) throw LoweringError("gadget operands must be distinct");
}

}  // namespace

std::vector<Gate> lower_toffoli(QubitRef c1, QubitRef c2, QubitRef t) {
  require_distinct(c1, c2, t);
  return {
      Gate::h(t),
      Gate::t(c1), Gate::t(c2), Gate::t(t),
      Gate::cnot(c2, c1),
      Gate::cnot(t, c2),
      Gate::cnot(c1, t),
      Gate::tdg(c2),
      Gate::cnot(c1, c2),
      Gate::tdg(c1), Gate::tdg(c2), Gate::t(t),
      Gate::cnot(t, c2),
      Gate::cnot(c1, t),
      Gate::cnot(c2, c1),
      Gate::h(t),
  };
}

std::vector<Gate> magic_state_preparation(QubitRef ancilla) {
  return {Gate::h(ancilla), Gate::t(ancilla)};
}

std::vector<Gate> temporary_and_body(QubitRef x, QubitRef y, QubitRef a) {
  require_distinct(x, y, a);
  return {
      Gate::cnot(x, a),
      Gate::cnot(y, a),
      Gate::cnot(a, x),
      Gate::cnot(a, y),
      Gate::tdg(x), Gate::tdg(y), Gate::t(a),
      Gate::cnot(a, x),
      Gate::cnot(a, y),
      Gate::h(a),
      Gate::s(a),
  };
}

std::vector<Gate> lower_temporary_and(QubitRef c1, QubitRef c2, QubitRef ancilla) {
  auto gates = magic_state_preparation(ancilla);
  auto body = temporary_and_body(c1, c2, ancilla);
  gates.insert(gates.end(), body.begin(), body.end());
  return gates;
}

std::vector<Gate> lower_uncompute(QubitRef c1, QubitRef c2, QubitRef target, std::uint32_t cbit) {
  require_distinct(c1, c2, target);
  return {Gate::measure_x(target, cbit), Gate::classically_controlled_cz(cbit, c1, c2)};
}

Circuit lower(const Circuit& circuit, const LoweringPolicy&) {
  if (circuit.level() != Level::Toffoli) throw LoweringError("lower() expects a Toffoli-level circuit");

  Circuit out = circuit.empty_copy(Level::CliffordT);
  // MagicA qubits not yet consumed by an AND since declaration or reset.
  std::set<QubitRef> unused_magic;
  for (std::uint32_t r = 0; r < circuit.registers().size(); ++r) {
    const auto& reg = circuit.registers()[r];
    for (std::uint32_t i = 0; i < reg.size(); ++i) {
      QubitRef q{r, i};
      if (reg.init[i] == AncillaInit::MagicA) {
        unused_magic.insert(q);
        out.set_register_init(q, AncillaInit::Zero);
      }
    }
  }

  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::Not:
      case GateKind::Cnot:
        for (QubitRef q : g.qubits()) unused_magic.erase(q);
        out.append(g);
        break;
      case GateKind::Reset:
        if (circuit.init_of(g.target()) == AncillaInit::MagicA) unused_magic.insert(g.target());
        out.append(g);
        break;
      case GateKind::Toffoli:
        for (QubitRef q : g.qubits()) unused_magic.erase(q);
        out.append(lower_toffoli(g.operands[0], g.operands[1], g.operands[2]));
        break;
      case GateKind::TemporaryAnd: {
        QubitRef a = g.operands[2];
        if (!unused_magic.contains(a)) {
          throw LoweringError(fmt::format("AND target {} is not an unused MagicA ancilla",
                                          circuit.qubit_name(a)));
        }
        unused_magic.erase(a);
        unused_magic.erase(g.operands[0]);
        unused_magic.erase(g.operands[1]);
        out.append(lower_temporary_and(g.operands[0], g.operands[1], a));
        break;
      }
      case GateKind::Uncompute: {
        std::uint32_t cbit = out.new_cbit();
        out.append(lower_uncompute(g.operands[0], g.operands[1], g.operands[2], cbit));
        break;
      }
      default:
        throw LoweringError(fmt::format("unexpected gate '{}' in a Toffoli-level circuit", gate_name(g.kind)));
    }
  }
  return out;
}

}  // namespace qcla
