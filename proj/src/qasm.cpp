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

#include <algorithm>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "qcla/io.hpp"

namespace qcla {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? fmt::format("line {}: {}", line, what) : what), line_(line) {}

namespace {

std::string init_string(const std::vector<AncillaInit>& init) {
  std::string s;
  for (auto i : init) s += i == AncillaInit::MagicA ? 'A' : '0';
  return s;
}

std::string ancilla_note(const Circuit& c, std::uint32_t r) {
  const auto& reg = c.registers()[r];
  std::string note = "ancilla";
  if (c.ancilla_pool() == r) note += " pool";
  if (!reg.init.empty()) note += " init=" + init_string(reg.init);
  return note;
}

const std::map<GateKind, std::string_view>& qasm_names() {
  static const std::map<GateKind, std::string_view> names = {
      {GateKind::Not, "x"},  {GateKind::Cnot, "cx"}, {GateKind::Reset, "reset"}, {GateKind::H, "h"},
      {GateKind::T, "t"},    {GateKind::Tdg, "tdg"}, {GateKind::S, "s"},         {GateKind::Sdg, "sdg"},
      {GateKind::Z, "z"},    {GateKind::Cz, "cz"},
  };
  return names;
}

}  // namespace

std::string to_qasm3(const Circuit& c) {
  if (c.level() != Level::CliffordT) throw CircuitError("QASM export needs a Clifford+T circuit; lower it first");

  std::string out = "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n\n";
  for (std::uint32_t r = 0; r < c.registers().size(); ++r) {
    const auto& reg = c.registers()[r];
    if (reg.size() == 0) {
      out += fmt::format("// @empty {}{}\n", reg.name, reg.ancilla ? " " + ancilla_note(c, r) : "");
    } else if (reg.ancilla) {
      out += fmt::format("qubit[{}] {};  // {}\n", reg.size(), reg.name, ancilla_note(c, r));
    } else {
      out += fmt::format("qubit[{}] {};\n", reg.size(), reg.name);
    }
  }
  if (c.num_cbits() > 0) out += fmt::format("bit[{}] c;\n", c.num_cbits());
  for (const auto& [q, label] : c.labels().entries()) {
    out += fmt::format("// @label {} {}\n", c.qubit_name(q), label.to_string());
  }
  out += "\n";

  for (std::uint32_t r = 0; r < c.registers().size(); ++r) {
    const auto& reg = c.registers()[r];
    for (std::uint32_t i = 0; i < reg.size(); ++i) {
      if (reg.init[i] != AncillaInit::MagicA) continue;
      const std::string q = c.qubit_name({r, i});
      out += fmt::format("// @magic {}\nh {};\nt {};\n", q, q, q);
    }
  }

  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::MeasureX: {
        const std::string q = c.qubit_name(g.operands[0]);
        out += fmt::format("h {};\nc[{}] = measure {};\n", q, *g.cbit, q);
        break;
      }
      case GateKind::ClassicallyControlledCz:
        out += fmt::format("if (c[{}] == 1) {{ cz {}, {}; }}\n", *g.cbit, c.qubit_name(g.operands[0]),
                           c.qubit_name(g.operands[1]));
        break;
      default: {
        out += qasm_names().at(g.kind);
        for (std::size_t k = 0; k < g.arity; ++k) out += (k ? ", " : " ") + c.qubit_name(g.operands[k]);
        out += ";\n";
      }
    }
  }
  return out;
}

namespace {

struct PendingRegister {
  RegisterSpec spec;
  bool pool = false;
};

/// Parses "ancilla [pool] [init=...]".
void parse_ancilla_note(std::string_view note, PendingRegister& reg, std::size_t line) {
  std::istringstream words{std::string(note)};
  std::string word;
  words >> word;
  if (word != "ancilla") throw ParseError(line, "expected an ancilla annotation");
  reg.spec.ancilla = true;
  while (words >> word) {
    if (word == "pool") {
      reg.pool = true;
    } else if (word.starts_with("init=")) {
      for (char ch : word.substr(5)) {
        if (ch == '0') {
          reg.spec.init.push_back(AncillaInit::Zero);
        } else if (ch == 'A') {
          reg.spec.init.push_back(AncillaInit::MagicA);
        } else {
          throw ParseError(line, fmt::format("bad init flag '{}'", ch));
        }
      }
    } else {
      throw ParseError(line, fmt::format("unknown annotation '{}'", word));
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Circuit parse_qasm3(std::string_view text) {
  static const std::regex qubit_decl(R"(qubit\[(\d+)\]\s+([A-Za-z_]\w*)\s*;\s*(?://\s*(.*))?)");
  static const std::regex bit_decl(R"(bit\[(\d+)\]\s+c\s*;)");
  static const std::regex empty_decl(R"(//\s*@empty\s+([A-Za-z_]\w*)\s*(.*))");
  static const std::regex label_line(R"(//\s*@label\s+(\w+\[\d+\])\s+(\S+))");
  static const std::regex magic_line(R"(//\s*@magic\s+(\w+\[\d+\]))");
  static const std::regex measure_line(R"(c\[(\d+)\]\s*=\s*measure\s+(\w+\[\d+\])\s*;)");
  static const std::regex if_line(R"(if\s*\(\s*c\[(\d+)\]\s*==\s*1\s*\)\s*\{\s*cz\s+(\w+\[\d+\])\s*,\s*(\w+\[\d+\])\s*;\s*\})");
  static const std::regex gate_line(R"(([a-z]+)\s+(\w+\[\d+\])(?:\s*,\s*(\w+\[\d+\]))?\s*;)");
  static const std::regex operand(R"((\w+)\[(\d+)\])");

  std::vector<PendingRegister> regs;
  std::uint32_t cbits = 0;
  std::vector<std::pair<std::string, std::string>> labels;
  std::vector<std::pair<Gate, std::size_t>> gates;
  std::optional<Circuit> circuit;
  std::size_t prologue_skip = 0;
  std::string prologue_qubit;
  bool header = false;

  auto make_circuit = [&](std::size_t line) -> Circuit& {
    if (circuit) return *circuit;
    std::vector<RegisterSpec> specs;
    for (auto& r : regs) {
      if (r.spec.ancilla && r.spec.init.empty()) r.spec.init.assign(r.spec.length, AncillaInit::Zero);
      specs.push_back(r.spec);
    }
    try {
      circuit = Circuit::create(specs, Level::CliffordT);
      for (auto& r : regs) {
        if (r.pool) circuit->set_ancilla_pool(r.spec.name);
      }
      circuit->set_num_cbits(cbits);
    } catch (const CircuitError& e) {
      throw ParseError(line, e.what());
    }
    return *circuit;
  };
  auto resolve = [&](const std::string& name, std::size_t line) {
    std::smatch m;
    if (!std::regex_match(name, m, operand)) throw ParseError(line, fmt::format("bad operand '{}'", name));
    try {
      return make_circuit(line).qubit(m[1].str(), std::stoul(m[2].str()));
    } catch (const CircuitError& e) {
      throw ParseError(line, e.what());
    }
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string line(trim(text.substr(pos, end - pos)));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    std::smatch m;

    if (!header) {
      if (line != "OPENQASM 3.0;") throw ParseError(line_no, "expected 'OPENQASM 3.0;'");
      header = true;
      continue;
    }
    if (line == "include \"stdgates.inc\";") continue;

    if (prologue_skip > 0) {
      const std::string want = (prologue_skip == 2 ? "h " : "t ") + prologue_qubit + ";";
      if (line != want) throw ParseError(line_no, fmt::format("expected '{}' in the magic-state prologue", want));
      --prologue_skip;
      continue;
    }

    if (!circuit) {
      if (std::regex_match(line, m, qubit_decl)) {
        PendingRegister r;
        r.spec.name = m[2].str();
        r.spec.length = std::stoul(m[1].str());
        if (m[3].matched) parse_ancilla_note(trim(m[3].str()), r, line_no);
        regs.push_back(std::move(r));
        continue;
      }
      if (std::regex_match(line, m, empty_decl)) {
        PendingRegister r;
        r.spec.name = m[1].str();
        if (!trim(m[2].str()).empty()) parse_ancilla_note(trim(m[2].str()), r, line_no);
        regs.push_back(std::move(r));
        continue;
      }
      if (std::regex_match(line, m, bit_decl)) {
        cbits = static_cast<std::uint32_t>(std::stoul(m[1].str()));
        continue;
      }
      if (std::regex_match(line, m, label_line)) {
        labels.emplace_back(m[1].str(), m[2].str());
        continue;
      }
    }
    if (std::regex_match(line, m, magic_line)) {
      Circuit& c = make_circuit(line_no);
      QubitRef q = resolve(m[1].str(), line_no);
      if (c.init_of(q) != AncillaInit::MagicA) throw ParseError(line_no, "@magic on a qubit not declared MagicA");
      prologue_qubit = m[1].str();
      prologue_skip = 2;
      continue;
    }
    if (line.starts_with("//")) continue;

    make_circuit(line_no);
    if (std::regex_match(line, m, measure_line)) {
      const QubitRef q = resolve(m[2].str(), line_no);
      // The h belongs to the X-basis measurement.
      if (gates.empty() || !(gates.back().first == Gate::h(q))) {
        throw ParseError(line_no, "measurement must follow an h on the same qubit");
      }
      gates.back() = {Gate::measure_x(q, static_cast<std::uint32_t>(std::stoul(m[1].str()))), line_no};
    } else if (std::regex_match(line, m, if_line)) {
      gates.emplace_back(Gate::classically_controlled_cz(static_cast<std::uint32_t>(std::stoul(m[1].str())),
                                                         resolve(m[2].str(), line_no), resolve(m[3].str(), line_no)),
                         line_no);
    } else if (std::regex_match(line, m, gate_line)) {
      const std::string name = m[1].str();
      auto it = std::find_if(qasm_names().begin(), qasm_names().end(),
                             [&](const auto& entry) { return entry.second == name; });
      if (it == qasm_names().end()) throw ParseError(line_no, fmt::format("unsupported gate '{}'", name));
      const GateKind kind = it->first;
      const bool two = kind == GateKind::Cnot || kind == GateKind::Cz;
      if (two != m[3].matched) throw ParseError(line_no, fmt::format("wrong operand count for '{}'", name));
      const QubitRef a = resolve(m[2].str(), line_no);
      Gate g;
      switch (kind) {
        case GateKind::Not: g = Gate::x(a); break;
        case GateKind::Reset: g = Gate::reset(a); break;
        case GateKind::H: g = Gate::h(a); break;
        case GateKind::T: g = Gate::t(a); break;
        case GateKind::Tdg: g = Gate::tdg(a); break;
        case GateKind::S: g = Gate::s(a); break;
        case GateKind::Sdg: g = Gate::sdg(a); break;
        case GateKind::Z: g = Gate::z(a); break;
        case GateKind::Cnot: g = Gate::cnot(a, resolve(m[3].str(), line_no)); break;
        case GateKind::Cz: g = Gate::cz(a, resolve(m[3].str(), line_no)); break;
        default: break;
      }
      gates.emplace_back(g, line_no);
    } else {
      throw ParseError(line_no, fmt::format("unsupported statement '{}'", line));
    }
  }
  if (!header) throw ParseError(0, "empty input");
  if (prologue_skip > 0) throw ParseError(line_no, "truncated magic-state prologue");

  Circuit& c = make_circuit(line_no);
  for (const auto& [g, line] : gates) {
    try {
      c.append(g);
    } catch (const CircuitError& e) {
      throw ParseError(line, e.what());
    }
  }
  for (const auto& [q, label] : labels) {
    try {
      c.labels().assign(resolve(q, 0), WireLabel::parse(label));
    } catch (const std::exception& e) {
      throw ParseError(0, fmt::format("bad label '{}': {}", label, e.what()));
    }
  }
  return std::move(c);
}

}  // namespace qcla
