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

#include "qcla/reversible_sim.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <random>
#include <thread>

namespace qcla {

SimulationError::SimulationError(SimErrorKind kind, std::size_t gate_index, const std::string& what)
    : std::runtime_error(what), kind_(kind), gate_index_(gate_index) {}

BasisState zero_state(const Circuit& circuit) {
  BasisState s;
  s.bits.assign(circuit.num_qubits(), 0);
  s.spent.assign(circuit.num_qubits(), 0);
  return s;
}

ReversibleSimulator::ReversibleSimulator(const Circuit& circuit) {
  if (circuit.level() != Level::Toffoli) {
    throw SimulationError(SimErrorKind::UnsupportedGate, 0, "reversible simulation needs a Toffoli-level circuit");
  }
  magic_.assign(circuit.num_qubits(), 0);
  const auto offsets = circuit.register_offsets();
  for (std::size_t r = 0; r < circuit.registers().size(); ++r) {
    const auto& init = circuit.registers()[r].init;
    for (std::size_t i = 0; i < init.size(); ++i) magic_[offsets[r] + i] = init[i] == AncillaInit::MagicA;
  }
  ops_.reserve(circuit.num_gates());
  for (const Gate& g : circuit.gates()) {
    Op op{g.kind, g.arity, {0, 0, 0}};
    for (std::size_t k = 0; k < g.arity; ++k) {
      op.q[k] = static_cast<std::uint32_t>(offsets[g.operands[k].reg] + g.operands[k].index);
    }
    ops_.push_back(op);
  }
}

BasisState ReversibleSimulator::run(BasisState s) const {
  if (s.bits.size() != magic_.size()) throw std::invalid_argument("basis state size does not match the circuit");
  if (s.spent.size() != s.bits.size()) s.spent.assign(s.bits.size(), 0);
  // MagicA ancillae not yet touched since declaration or reset.
  std::vector<std::uint8_t> fresh = magic_;
  auto& b = s.bits;

  for (std::size_t gi = 0; gi < ops_.size(); ++gi) {
    const Op& op = ops_[gi];
    for (std::size_t k = 0; k < op.arity; ++k) {
      if (op.kind != GateKind::Reset && s.spent[op.q[k]]) {
        throw SimulationError(SimErrorKind::SpentQubitUse, gi,
                              fmt::format("gate {} touches spent qubit {}", gi, op.q[k]));
      }
    }
    switch (op.kind) {
      case GateKind::Not:
        b[op.q[0]] ^= 1;
        break;
      case GateKind::Cnot:
        b[op.q[1]] ^= b[op.q[0]];
        break;
      case GateKind::Toffoli:
        b[op.q[2]] ^= b[op.q[0]] & b[op.q[1]];
        break;
      case GateKind::TemporaryAnd:
        if (!fresh[op.q[2]]) {
          throw SimulationError(SimErrorKind::MagicMisuse, gi,
                                fmt::format("gate {}: AND target {} is not a fresh MagicA ancilla", gi, op.q[2]));
        }
        b[op.q[2]] = b[op.q[0]] & b[op.q[1]];
        break;
      case GateKind::Uncompute:
        if (b[op.q[2]] != (b[op.q[0]] & b[op.q[1]])) {
          throw SimulationError(SimErrorKind::UncomputeAssertion, gi,
                                fmt::format("gate {}: uncompute target {} does not hold the AND of its controls",
                                            gi, op.q[2]));
        }
        b[op.q[2]] = 0;
        s.spent[op.q[2]] = 1;
        break;
      case GateKind::Reset:
        // Only measured-out or clean qubits may be reset; anything else
        // would silently discard a computed value.
        if (!s.spent[op.q[0]] && b[op.q[0]]) {
          throw SimulationError(SimErrorKind::UncomputeAssertion, gi, fmt::format("gate {} resets a live 1", gi));
        }
        b[op.q[0]] = 0;
        s.spent[op.q[0]] = 0;
        fresh[op.q[0]] = magic_[op.q[0]];
        continue;
      default:
        throw SimulationError(SimErrorKind::UnsupportedGate, gi, fmt::format("gate {} is not classical", gi));
    }
    for (std::size_t k = 0; k < op.arity; ++k) fresh[op.q[k]] = 0;
  }
  return s;
}

BasisState run_basis(const Circuit& circuit, const BasisState& input) {
  return ReversibleSimulator(circuit).run(input);
}

// ---------------------------------------------------------------------------
// Adder plumbing

AdderLayout adder_layout(const Circuit& circuit) {
  AdderLayout l;
  const auto a_reg = circuit.find_register("A");
  const auto b_reg = circuit.find_register("B");
  if (!a_reg || !b_reg) throw CircuitError("adder circuits need registers A and B");
  l.n = static_cast<unsigned>(circuit.registers()[*a_reg].size());
  const WireNameMap& labels = circuit.labels();
  l.in_place = !labels.find(WireLabel::b(0)).has_value();
  for (unsigned i = 0; i < l.n; ++i) {
    l.a_in.push_back(circuit.flat_index(circuit.qubit("A", i)));
    l.b_in.push_back(circuit.flat_index(circuit.qubit("B", i)));
    l.a_out.push_back(circuit.flat_index(labels.at(WireLabel::a(i))));
    if (!l.in_place) l.b_out.push_back(circuit.flat_index(labels.at(WireLabel::b(i))));
  }
  for (unsigned i = 0; i <= l.n; ++i) l.sum.push_back(circuit.flat_index(labels.at(WireLabel::s(i))));
  return l;
}

BasisState adder_input(const Circuit& circuit, const AdderLayout& layout, std::uint64_t a, std::uint64_t b) {
  BasisState s = zero_state(circuit);
  for (unsigned i = 0; i < layout.n; ++i) {
    s.bits[layout.a_in[i]] = (a >> i) & 1;
    s.bits[layout.b_in[i]] = (b >> i) & 1;
  }
  return s;
}

AdderReadout read_adder(const AdderLayout& layout, const BasisState& state, std::uint64_t a, std::uint64_t b) {
  AdderReadout r;
  for (unsigned i = 0; i < layout.n; ++i) {
    if (state.bits[layout.sum[i]]) r.sum.low |= std::uint64_t{1} << i;
  }
  r.sum.carry = state.bits[layout.sum[layout.n]] != 0;

  std::uint64_t a_back = 0;
  std::uint64_t b_back = 0;
  for (unsigned i = 0; i < layout.n; ++i) {
    a_back |= std::uint64_t{state.bits[layout.a_out[i]]} << i;
    if (!layout.in_place) b_back |= std::uint64_t{state.bits[layout.b_out[i]]} << i;
  }
  r.operands_restored = a_back == a && (layout.in_place || b_back == b);

  std::vector<std::uint8_t> output(state.bits.size(), 0);
  for (auto q : layout.a_out) output[q] = 1;
  for (auto q : layout.b_out) output[q] = 1;
  for (auto q : layout.sum) output[q] = 1;
  r.garbage_free = true;
  for (std::size_t q = 0; q < state.bits.size(); ++q) {
    if (!output[q] && state.bits[q] && !state.spent[q]) r.garbage_free = false;
  }
  return r;
}

namespace {

bool labels_on_result_qubits(const Circuit& c, const AdderLayout& l) {
  if (l.a_out != l.a_in) return false;
  if (!l.in_place && l.b_out != l.b_in) return false;
  for (unsigned i = 0; i <= l.n; ++i) {
    QubitRef expect = !l.in_place      ? c.qubit("X", i)
                      : i < l.n        ? c.qubit("B", i)
                                       : c.qubit("Z", l.n - 1);
    if (l.sum[i] != c.flat_index(expect)) return false;
  }
  return true;
}

struct PartialReport {
  std::uint64_t passed = 0;
  std::vector<CheckFailure> mismatches;
  std::vector<CheckFailure> assertion_failures;
};

void check_pair(const ReversibleSimulator& sim, const Circuit& c, const AdderLayout& l, std::uint64_t a,
                std::uint64_t b, PartialReport& out) {
  BasisState result;
  try {
    result = sim.run(adder_input(c, l, a, b));
  } catch (const SimulationError& e) {
    out.assertion_failures.push_back({a, b, e.what()});
    return;
  }
  const AdderReadout r = read_adder(l, result, a, b);
  const AdderSum want = cla_reference(a, b, l.n);
  if (r.sum != want) {
    out.mismatches.push_back({a, b, fmt::format("sum {}+{}*2^n, expected {}+{}*2^n", r.sum.low, int{r.sum.carry},
                                                want.low, int{want.carry})});
  } else if (!r.operands_restored) {
    out.mismatches.push_back({a, b, "operands not restored"});
  } else if (!r.garbage_free) {
    out.mismatches.push_back({a, b, "ancilla garbage left behind"});
  } else {
    ++out.passed;
  }
}

CheckReport merge(DesignId design, unsigned n, std::uint64_t total, bool labels_ok,
                  std::vector<PartialReport>& parts) {
  CheckReport rep{design, n, total, 0, labels_ok, {}, {}};
  for (auto& p : parts) {
    rep.passed += p.passed;
    rep.mismatches.insert(rep.mismatches.end(), p.mismatches.begin(), p.mismatches.end());
    rep.assertion_failures.insert(rep.assertion_failures.end(), p.assertion_failures.begin(),
                                  p.assertion_failures.end());
  }
  return rep;
}

}  // namespace

CheckReport exhaustive_check(DesignId design, unsigned n, unsigned bound) {
  if (n == 0 || n > bound || n > 31) {
    throw std::invalid_argument(fmt::format("exhaustive check supports 1 <= n <= {}", bound));
  }
  const Circuit c = build(design, n);
  const AdderLayout l = adder_layout(c);
  const ReversibleSimulator sim(c);
  const std::uint64_t side = std::uint64_t{1} << n;

  // One contiguous block of `a` values per worker; blocks merge in order.
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), side));
  std::vector<PartialReport> parts(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t lo = side * w / workers;
      const std::uint64_t hi = side * (w + 1) / workers;
      for (std::uint64_t a = lo; a < hi; ++a) {
        for (std::uint64_t b = 0; b < side; ++b) check_pair(sim, c, l, a, b, parts[w]);
      }
    });
  }
  for (auto& t : pool) t.join();
  return merge(design, n, side * side, labels_on_result_qubits(c, l), parts);
}

CheckReport random_check(DesignId design, unsigned n, std::uint64_t count, std::uint64_t seed) {
  if (n == 0 || n > 64) throw std::invalid_argument("random check supports 1 <= n <= 64");
  const Circuit c = build(design, n);
  const AdderLayout l = adder_layout(c);
  const ReversibleSimulator sim(c);
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::mt19937_64 rng(seed);
  std::vector<PartialReport> parts(1);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t a = rng() & mask;
    std::uint64_t b = rng() & mask;
    check_pair(sim, c, l, a, b, parts[0]);
  }
  return merge(design, n, count, labels_on_result_qubits(c, l), parts);
}

}  // namespace qcla
