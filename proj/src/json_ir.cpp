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

#include <fmt/format.h>

#include <json.hpp>

#include "qcla/io.hpp"

namespace qcla {

using nlohmann::ordered_json;

namespace {

constexpr std::array kAllKinds = {
    GateKind::Not, GateKind::Cnot, GateKind::Reset, GateKind::Toffoli, GateKind::TemporaryAnd,
    GateKind::Uncompute, GateKind::H, GateKind::T, GateKind::Tdg, GateKind::S, GateKind::Sdg, GateKind::Z,
    GateKind::Cz, GateKind::MeasureX, GateKind::ClassicallyControlledCz,
};

GateKind kind_from_name(const std::string& name) {
  for (auto k : kAllKinds) {
    if (gate_name(k) == name) return k;
  }
  throw ParseError(0, fmt::format("unknown gate '{}'", name));
}

ordered_json qubit_json(const Circuit& c, QubitRef q) {
  return ordered_json::array({c.registers()[q.reg].name, q.index});
}

}  // namespace

std::string to_json(const Circuit& c) {
  ordered_json doc;
  doc["schema"] = kJsonSchema;
  doc["level"] = c.level() == Level::Toffoli ? "toffoli" : "cliffordt";

  ordered_json regs = ordered_json::array();
  for (std::uint32_t r = 0; r < c.registers().size(); ++r) {
    const auto& reg = c.registers()[r];
    ordered_json jr;
    jr["name"] = reg.name;
    jr["size"] = reg.size();
    jr["ancilla"] = reg.ancilla;
    jr["pool"] = c.ancilla_pool() == r;
    std::string init;
    for (auto i : reg.init) init += i == AncillaInit::MagicA ? 'A' : '0';
    jr["init"] = init;
    regs.push_back(std::move(jr));
  }
  doc["registers"] = std::move(regs);
  doc["classical_bits"] = c.num_cbits();

  ordered_json gates = ordered_json::array();
  for (const Gate& g : c.gates()) {
    ordered_json jg;
    jg["op"] = gate_name(g.kind);
    ordered_json qs = ordered_json::array();
    for (QubitRef q : g.qubits()) qs.push_back(qubit_json(c, q));
    jg["qubits"] = std::move(qs);
    if (g.cbit) jg["cbit"] = *g.cbit;
    gates.push_back(std::move(jg));
  }
  doc["gates"] = std::move(gates);

  ordered_json labels = ordered_json::array();
  for (const auto& [q, label] : c.labels().entries()) {
    labels.push_back({{"qubit", qubit_json(c, q)}, {"label", label.to_string()}});
  }
  doc["labels"] = std::move(labels);
  return doc.dump(2) + "\n";
}

Circuit parse_json(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    if (doc.at("schema").get<std::string>() != kJsonSchema) {
      throw ParseError(0, fmt::format("unsupported schema '{}'", doc.at("schema").get<std::string>()));
    }
    const std::string level_name = doc.at("level").get<std::string>();
    if (level_name != "toffoli" && level_name != "cliffordt") {
      throw ParseError(0, fmt::format("unknown level '{}'", level_name));
    }
    const Level level = level_name == "toffoli" ? Level::Toffoli : Level::CliffordT;

    std::vector<RegisterSpec> specs;
    std::optional<std::string> pool;
    for (const auto& jr : doc.at("registers")) {
      RegisterSpec spec;
      spec.name = jr.at("name").get<std::string>();
      spec.length = jr.at("size").get<std::size_t>();
      spec.ancilla = jr.at("ancilla").get<bool>();
      const std::string init = jr.at("init").get<std::string>();
      if (init.size() != spec.length) throw ParseError(0, fmt::format("register '{}': init length", spec.name));
      for (char ch : init) {
        if (ch != '0' && ch != 'A') throw ParseError(0, fmt::format("register '{}': bad init flag", spec.name));
        spec.init.push_back(ch == 'A' ? AncillaInit::MagicA : AncillaInit::Zero);
      }
      // Operand registers are all-|0> and flagged by `ancilla`.
      if (!spec.ancilla) spec.init.clear();
      if (jr.at("pool").get<bool>()) pool = spec.name;
      specs.push_back(std::move(spec));
    }
    Circuit c = Circuit::create(specs, level);
    if (pool) c.set_ancilla_pool(*pool);
    c.set_num_cbits(doc.at("classical_bits").get<std::uint32_t>());

    auto resolve = [&](const ordered_json& jq) {
      return c.qubit(jq.at(0).get<std::string>(), jq.at(1).get<std::size_t>());
    };
    for (const auto& jg : doc.at("gates")) {
      Gate g;
      g.kind = kind_from_name(jg.at("op").get<std::string>());
      const auto& qs = jg.at("qubits");
      if (qs.size() > 3) throw ParseError(0, "too many operands");
      for (const auto& jq : qs) g.operands[g.arity++] = resolve(jq);
      if (jg.contains("cbit")) g.cbit = jg.at("cbit").get<std::uint32_t>();
      // Round through the factory so arity rules are enforced.
      Gate canonical;
      auto need = [&](std::size_t k) {
        if (g.arity != k) throw ParseError(0, fmt::format("'{}' takes {} qubits", gate_name(g.kind), k));
      };
      auto cbit = [&] {
        if (!g.cbit) throw ParseError(0, fmt::format("'{}' needs a classical bit", gate_name(g.kind)));
        return *g.cbit;
      };
      const auto& o = g.operands;
      switch (g.kind) {
        case GateKind::Not: need(1); canonical = Gate::x(o[0]); break;
        case GateKind::Reset: need(1); canonical = Gate::reset(o[0]); break;
        case GateKind::H: need(1); canonical = Gate::h(o[0]); break;
        case GateKind::T: need(1); canonical = Gate::t(o[0]); break;
        case GateKind::Tdg: need(1); canonical = Gate::tdg(o[0]); break;
        case GateKind::S: need(1); canonical = Gate::s(o[0]); break;
        case GateKind::Sdg: need(1); canonical = Gate::sdg(o[0]); break;
        case GateKind::Z: need(1); canonical = Gate::z(o[0]); break;
        case GateKind::Cnot: need(2); canonical = Gate::cnot(o[0], o[1]); break;
        case GateKind::Cz: need(2); canonical = Gate::cz(o[0], o[1]); break;
        case GateKind::Toffoli: need(3); canonical = Gate::toffoli(o[0], o[1], o[2]); break;
        case GateKind::TemporaryAnd: need(3); canonical = Gate::temporary_and(o[0], o[1], o[2]); break;
        case GateKind::Uncompute: need(3); canonical = Gate::uncompute(o[0], o[1], o[2]); break;
        case GateKind::MeasureX: need(1); canonical = Gate::measure_x(o[0], cbit()); break;
        case GateKind::ClassicallyControlledCz:
          need(2);
          canonical = Gate::classically_controlled_cz(cbit(), o[0], o[1]);
          break;
      }
      c.append(canonical);
    }
    for (const auto& jl : doc.at("labels")) {
      c.labels().assign(resolve(jl.at("qubit")), WireLabel::parse(jl.at("label").get<std::string>()));
    }
    return c;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace qcla
