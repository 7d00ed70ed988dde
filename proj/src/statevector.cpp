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

#include "qcla/statevector.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qcla/lowering.hpp"

namespace qcla {

namespace {

const Amplitude kT = std::polar(1.0, std::numbers::pi / 4);
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(std::size_t num_qubits, std::size_t cap) : num_qubits_(num_qubits) {
  if (num_qubits > cap) {
    throw StatevectorError(SvErrorKind::QubitCap,
                           fmt::format("{} qubits exceed the statevector cap of {}", num_qubits, cap));
  }
  amps_.assign(std::size_t{1} << num_qubits, Amplitude{0});
  amps_[0] = 1;
}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index, std::size_t cap) {
  StateVector sv(num_qubits, cap);
  sv.amps_[0] = 0;
  sv.amps_.at(index) = 1;
  return sv;
}

void StateVector::x(std::size_t q) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
  }
}

void StateVector::h(std::size_t q) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const Amplitude a0 = amps_[i];
    const Amplitude a1 = amps_[i | bit];
    amps_[i] = (a0 + a1) * kInvSqrt2;
    amps_[i | bit] = (a0 - a1) * kInvSqrt2;
  }
}

void StateVector::phase(std::size_t q, Amplitude phase) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) amps_[i] *= phase;
  }
}

void StateVector::cnot(std::size_t control, std::size_t target) {
  const std::size_t cb = std::size_t{1} << control;
  const std::size_t tb = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cb) && !(i & tb)) std::swap(amps_[i], amps_[i | tb]);
  }
}

void StateVector::cz(std::size_t a, std::size_t b) {
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & mask) == mask) amps_[i] = -amps_[i];
  }
}

double StateVector::probability_one(std::size_t q) const {
  const std::size_t bit = std::size_t{1} << q;
  double p = 0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) p += std::norm(amps_[i]);
  }
  return p;
}

double StateVector::collapse(std::size_t q, bool outcome) {
  const std::size_t bit = std::size_t{1} << q;
  double p = 0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (bool(i & bit) == outcome) {
      p += std::norm(amps_[i]);
    } else {
      amps_[i] = 0;
    }
  }
  if (p > 0) {
    const double scale = 1.0 / std::sqrt(p);
    for (auto& a : amps_) a *= scale;
  }
  return p;
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// Simulation

namespace {

struct FlatGate {
  GateKind kind;
  std::uint32_t q[3];
  std::uint32_t cbit;
};

void apply_unitary(StateVector& sv, const FlatGate& g) {
  switch (g.kind) {
    case GateKind::Not: sv.x(g.q[0]); break;
    case GateKind::Cnot: sv.cnot(g.q[0], g.q[1]); break;
    case GateKind::H: sv.h(g.q[0]); break;
    case GateKind::T: sv.phase(g.q[0], kT); break;
    case GateKind::Tdg: sv.phase(g.q[0], std::conj(kT)); break;
    case GateKind::S: sv.phase(g.q[0], Amplitude{0, 1}); break;
    case GateKind::Sdg: sv.phase(g.q[0], Amplitude{0, -1}); break;
    case GateKind::Z: sv.phase(g.q[0], Amplitude{-1}); break;
    case GateKind::Cz: sv.cz(g.q[0], g.q[1]); break;
    default: break;
  }
}

struct Path {
  StateVector sv;
  std::size_t next_gate = 0;
  std::size_t measured = 0;
  std::vector<std::uint8_t> cbits;
  double probability = 1;
};

}  // namespace

SvResult simulate(const Circuit& circuit, const BasisState& input, const MeasurementStrategy& strategy,
                  const SvOptions& options) {
  if (circuit.level() != Level::CliffordT) {
    throw StatevectorError(SvErrorKind::LevelMismatch, "statevector simulation needs a Clifford+T circuit");
  }
  const std::size_t nq = circuit.num_qubits();
  if (nq > options.qubit_cap) {
    throw StatevectorError(SvErrorKind::QubitCap,
                           fmt::format("{} qubits exceed the statevector cap of {}", nq, options.qubit_cap));
  }
  if (input.bits.size() != nq) throw std::invalid_argument("basis input size does not match the circuit");

  const auto offsets = circuit.register_offsets();
  std::vector<FlatGate> gates;
  std::size_t measurements = 0;
  for (const Gate& g : circuit.gates()) {
    FlatGate f{g.kind, {0, 0, 0}, g.cbit.value_or(0)};
    for (std::size_t k = 0; k < g.arity; ++k) {
      f.q[k] = static_cast<std::uint32_t>(offsets[g.operands[k].reg] + g.operands[k].index);
    }
    if (g.kind == GateKind::MeasureX) ++measurements;
    gates.push_back(f);
  }
  if (strategy.kind == MeasurementStrategy::Kind::FixedOutcomes && strategy.outcomes.size() != measurements) {
    throw StatevectorError(SvErrorKind::BadOutcomes,
                           fmt::format("{} fixed outcomes for {} measurements", strategy.outcomes.size(),
                                       measurements));
  }

  // Initial product state: basis bits on plain qubits, |A> on MagicA ones.
  std::uint64_t index = 0;
  std::vector<std::size_t> magic;
  for (std::size_t r = 0; r < circuit.registers().size(); ++r) {
    const auto& reg = circuit.registers()[r];
    for (std::size_t i = 0; i < reg.size(); ++i) {
      const std::size_t q = offsets[r] + i;
      if (reg.init[i] == AncillaInit::MagicA) {
        magic.push_back(q);
      } else if (!reg.ancilla && input.bits[q]) {
        index |= std::uint64_t{1} << q;
      }
    }
  }
  StateVector start = StateVector::basis(nq, index, options.qubit_cap);
  for (std::size_t q : magic) {
    start.h(q);
    start.phase(q, kT);
  }

  SvResult result;
  std::mt19937_64 rng(strategy.seed);
  std::vector<Path> stack;
  stack.push_back({std::move(start), 0, 0, std::vector<std::uint8_t>(circuit.num_cbits(), 0), 1.0});
  std::size_t branches_created = 1;

  auto check_norm = [&](const StateVector& sv, std::size_t gi) {
    const double err = std::abs(sv.norm() - 1.0);
    result.max_norm_error = std::max(result.max_norm_error, err);
    if (err > options.norm_tolerance) {
      throw StatevectorError(SvErrorKind::NormDrift, fmt::format("norm drifted by {} after gate {}", err, gi));
    }
  };

  while (!stack.empty()) {
    Path path = std::move(stack.back());
    stack.pop_back();

    for (; path.next_gate < gates.size(); ++path.next_gate) {
      const std::size_t gi = path.next_gate;
      const FlatGate& g = gates[gi];
      if (g.kind == GateKind::ClassicallyControlledCz) {
        if (path.cbits[g.cbit]) path.sv.cz(g.q[0], g.q[1]);
        continue;
      }
      if (g.kind != GateKind::MeasureX && g.kind != GateKind::Reset) {
        apply_unitary(path.sv, g);
        if (options.check_norm_every_gate) check_norm(path.sv, gi);
        continue;
      }

      // Z-basis measurement (after H for MeasureX).
      const bool is_measure = g.kind == GateKind::MeasureX;
      if (is_measure) path.sv.h(g.q[0]);
      const double p1 = path.sv.probability_one(g.q[0]);
      const double p0 = 1.0 - p1;
      bool outcome = false;
      if (is_measure && strategy.kind == MeasurementStrategy::Kind::FixedOutcomes) {
        outcome = strategy.outcomes[path.measured] != 0;
        if ((outcome ? p1 : p0) < options.prune_probability) {
          throw StatevectorError(SvErrorKind::BadOutcomes,
                                 fmt::format("fixed outcome {} at gate {} has zero probability", int{outcome}, gi));
        }
      } else if (strategy.kind == MeasurementStrategy::Kind::SeededRandom) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        outcome = u < p1;
      } else if (p0 < options.prune_probability) {
        outcome = true;
      } else if (p1 >= options.prune_probability) {
        // Both outcomes live: defer outcome 1, continue with 0.
        if (++branches_created > options.branch_limit) {
          throw StatevectorError(SvErrorKind::BranchLimit,
                                 fmt::format("more than {} measurement branches", options.branch_limit));
        }
        Path other{path.sv, gi, path.measured, path.cbits, path.probability};
        other.probability *= other.sv.collapse(g.q[0], true);
        if (is_measure) other.cbits[g.cbit] = 1;
        other.measured += is_measure;
        if (!is_measure) other.sv.x(g.q[0]);
        ++other.next_gate;
        stack.push_back(std::move(other));
      }
      path.probability *= path.sv.collapse(g.q[0], outcome);
      if (is_measure) {
        path.cbits[g.cbit] = outcome;
        ++path.measured;
      } else if (outcome) {
        path.sv.x(g.q[0]);
      }
      check_norm(path.sv, gi);
    }
    check_norm(path.sv, gates.size());

    SvBranch branch{path.cbits, {}, path.probability};
    for (const auto& [q, label] : circuit.labels().entries()) {
      if (!label.unique()) continue;
      const double p = path.sv.probability_one(circuit.flat_index(q));
      if (p > options.norm_tolerance && p < 1.0 - options.norm_tolerance) {
        throw StatevectorError(SvErrorKind::NonClassicalOutput,
                               fmt::format("output {} is not classical (P(1) = {})", label.to_string(), p));
      }
      branch.readout[label] = p > 0.5;
    }
    result.total_probability += branch.probability;
    result.branches.push_back(std::move(branch));
  }
  return result;
}

AdderSum branch_sum(const SvBranch& branch, unsigned n) {
  AdderSum s;
  for (unsigned i = 0; i < n; ++i) {
    if (branch.readout.at(WireLabel::s(i))) s.low |= std::uint64_t{1} << i;
  }
  s.carry = branch.readout.at(WireLabel::s(n)) != 0;
  return s;
}

// ---------------------------------------------------------------------------
// Gadget certification

std::string_view gadget_name(Gadget gadget) {
  switch (gadget) {
    case Gadget::ToffoliLowering: return "ToffoliLowering";
    case Gadget::AndLowering: return "AndLowering";
    case Gadget::AndUncomputePair: return "AndUncomputePair";
  }
  return "?";
}

namespace {

constexpr double kGadgetTolerance = 1e-10;

QubitRef wire(std::uint32_t i) { return {0, i}; }

/// Applies single-register gates; MeasureX takes its outcome from `outcomes`
/// in order and returns false if that outcome was impossible.
bool run_gadget(StateVector& sv, const std::vector<Gate>& gates, const std::vector<std::uint8_t>& outcomes) {
  std::vector<std::uint8_t> cbits(outcomes.size(), 0);
  std::size_t next = 0;
  for (const Gate& g : gates) {
    FlatGate f{g.kind, {g.operands[0].index, g.operands[1].index, g.operands[2].index}, g.cbit.value_or(0)};
    if (g.kind == GateKind::MeasureX) {
      sv.h(f.q[0]);
      const bool m = outcomes.at(next++) != 0;
      if (sv.collapse(f.q[0], m) < 1e-24) return false;
      cbits.at(f.cbit) = m;
    } else if (g.kind == GateKind::ClassicallyControlledCz) {
      if (cbits.at(f.cbit)) sv.cz(f.q[0], f.q[1]);
    } else {
      apply_unitary(sv, f);
    }
  }
  return true;
}

/// Tracks the worst deviation of `sv` from phase * |expected>, fitting the
/// phase on first use.
struct PhaseFit {
  std::optional<Amplitude> phase;
  double worst = 0;

  void compare(const StateVector& sv, std::uint64_t expected) {
    const auto& a = sv.amplitudes();
    if (!phase) phase = a[expected];
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Amplitude want = i == expected ? *phase : Amplitude{0};
      worst = std::max(worst, std::abs(a[i] - want));
    }
  }
};

std::uint64_t toffoli_image(std::uint64_t x) { return x ^ (((x & 1) & ((x >> 1) & 1)) << 2); }

}  // namespace

GadgetReport gadget_unitary_check(Gadget gadget) {
  GadgetReport rep{gadget, false, 0, 0};
  switch (gadget) {
    case Gadget::ToffoliLowering: {
      const auto gates = lower_toffoli(wire(0), wire(1), wire(2));
      PhaseFit fit;
      for (std::uint64_t x = 0; x < 8; ++x) {
        StateVector sv = StateVector::basis(3, x);
        run_gadget(sv, gates, {});
        fit.compare(sv, toffoli_image(x));
        ++rep.cases;
      }
      rep.max_deviation = fit.worst;
      break;
    }
    case Gadget::AndLowering: {
      // From a |0> ancilla including the |A> preparation ...
      const auto full = lower_temporary_and(wire(0), wire(1), wire(2));
      PhaseFit prepared;
      for (std::uint64_t x = 0; x < 4; ++x) {
        StateVector sv = StateVector::basis(3, x);
        run_gadget(sv, full, {});
        prepared.compare(sv, toffoli_image(x));
        ++rep.cases;
      }
      // ... and the bare body consuming a MagicA resource state.
      const auto body = temporary_and_body(wire(0), wire(1), wire(2));
      PhaseFit resource;
      for (std::uint64_t x = 0; x < 4; ++x) {
        StateVector sv(3);
        auto& a = sv.amplitudes();
        a[0] = 0;
        a[x] = kInvSqrt2;
        a[x | 4] = kT * kInvSqrt2;
        run_gadget(sv, body, {});
        resource.compare(sv, toffoli_image(x));
        ++rep.cases;
      }
      rep.max_deviation = std::max(prepared.worst, resource.worst);
      break;
    }
    case Gadget::AndUncomputePair: {
      // Logical wires c1 = 0, c2 = 1, target = 3; the AND ancilla is 2.
      std::vector<Gate> gates = lower_temporary_and(wire(0), wire(1), wire(2));
      gates.push_back(Gate::cnot(wire(2), wire(3)));
      for (const Gate& g : lower_uncompute(wire(0), wire(1), wire(2), 0)) gates.push_back(g);
      auto spread = [](std::uint64_t logical) { return (logical & 3) | ((logical >> 2) << 3); };
      for (std::uint8_t m = 0; m < 2; ++m) {
        PhaseFit fit;
        for (std::uint64_t x = 0; x < 8; ++x) {
          StateVector sv = StateVector::basis(4, spread(x));
          if (!run_gadget(sv, gates, {m})) {
            fit.worst = std::max(fit.worst, 1.0);
          } else {
            fit.compare(sv, spread(toffoli_image(x)) | (std::uint64_t{m} << 2));
          }
          ++rep.cases;
        }
        rep.max_deviation = std::max(rep.max_deviation, fit.worst);
      }
      break;
    }
  }
  rep.pass = rep.max_deviation < kGadgetTolerance;
  return rep;
}

}  // namespace qcla
