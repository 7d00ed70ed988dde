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

#include <gtest/gtest.h>

#include <algorithm>

#include "qcla/builders.hpp"
#include "qcla/resources.hpp"

namespace qcla {
namespace {

QubitRef q(std::uint32_t i) { return {0, i}; }

std::size_t t_gates(const std::vector<Gate>& gates) {
  return std::count_if(gates.begin(), gates.end(),
                       [](const Gate& g) { return g.kind == GateKind::T || g.kind == GateKind::Tdg; });
}

TEST(Gadgets, TCounts) {
  EXPECT_EQ(t_gates(lower_toffoli(q(0), q(1), q(2))), 7u);
  EXPECT_EQ(t_gates(lower_temporary_and(q(0), q(1), q(2))), 4u);
  EXPECT_EQ(t_gates(temporary_and_body(q(0), q(1), q(2))), 3u);
  EXPECT_EQ(t_gates(magic_state_preparation(q(2))), 1u);
  EXPECT_EQ(t_gates(lower_uncompute(q(0), q(1), q(2), 0)), 0u);
}

TEST(Gadgets, ToffoliTouchesOnlyItsOperands) {
  for (const Gate& g : lower_toffoli(q(4), q(1), q(7))) {
    for (QubitRef r : g.qubits()) EXPECT_TRUE(r == q(4) || r == q(1) || r == q(7));
  }
  EXPECT_THROW(lower_toffoli(q(1), q(1), q(2)), LoweringError);
}

TEST(Gadgets, UncomputeIsMeasureThenConditionalCz) {
  const auto gates = lower_uncompute(q(0), q(1), q(2), 3);
  ASSERT_EQ(gates.size(), 2u);
  EXPECT_EQ(gates[0], Gate::measure_x(q(2), 3));
  EXPECT_EQ(gates[1], Gate::classically_controlled_cz(3, q(0), q(1)));
}

Circuit three_qubits_with_magic() {
  Circuit c = Circuit::create({{"c", 2, {}, false}, {"t", 2, {AncillaInit::Zero, AncillaInit::MagicA}, true}});
  return c;
}

TEST(Lower, MixedGadgetsCostElevenT) {
  Circuit c = three_qubits_with_magic();
  const QubitRef c0 = c.qubit("c", 0), c1 = c.qubit("c", 1), t0 = c.qubit("t", 0), t1 = c.qubit("t", 1);
  c.append(Gate::toffoli(c0, c1, t0));
  c.append(Gate::temporary_and(c0, c1, t1));
  c.append(Gate::uncompute(c0, c1, t1));
  const Circuit low = lower(c);
  EXPECT_EQ(low.level(), Level::CliffordT);
  EXPECT_EQ(count(low).t_count, 11);
  EXPECT_EQ(low.num_cbits(), 1u);
  EXPECT_EQ(low.num_qubits(), c.num_qubits());
  EXPECT_EQ(low.init_of(t1), AncillaInit::Zero);
}

TEST(Lower, EmptyCircuit) {
  const Circuit low = lower(Circuit::create({}));
  EXPECT_EQ(low.num_gates(), 0u);
  EXPECT_EQ(low.level(), Level::CliffordT);
}

TEST(Lower, RejectsCliffordTInput) {
  EXPECT_THROW(lower(Circuit::create({}, Level::CliffordT)), LoweringError);
}

TEST(Lower, AndNeedsAnUnusedMagicTarget) {
  Circuit c = three_qubits_with_magic();
  const QubitRef c0 = c.qubit("c", 0), c1 = c.qubit("c", 1);
  c.append(Gate::temporary_and(c0, c1, c.qubit("t", 0)));
  EXPECT_THROW(lower(c), LoweringError);

  Circuit twice = three_qubits_with_magic();
  twice.append(Gate::temporary_and(c0, c1, twice.qubit("t", 1)));
  twice.append(Gate::temporary_and(c0, c1, twice.qubit("t", 1)));
  EXPECT_THROW(lower(twice), LoweringError);
}

TEST(Lower, ResetRestoresMagicAvailability) {
  Circuit c = three_qubits_with_magic();
  const QubitRef c0 = c.qubit("c", 0), c1 = c.qubit("c", 1), t1 = c.qubit("t", 1);
  c.append(Gate::temporary_and(c0, c1, t1));
  c.append(Gate::uncompute(c0, c1, t1));
  c.append(Gate::reset(t1));
  c.append(Gate::temporary_and(c0, c1, t1));
  EXPECT_EQ(count(lower(c)).t_count, 8);
}

TEST(Lower, OutFtQcla1AtWidthEight) { EXPECT_EQ(count(lower(build(DesignId::OutFtQcla1, 8))).t_count, 92); }

TEST(Lower, OutFtQcla1AtWidthOne) { EXPECT_EQ(count(lower(build(DesignId::OutFtQcla1, 1))).t_count, 4); }

TEST(Lower, TCountIsSevenPerToffoliFourPerAnd) {
  for (DesignId d : kAllDesigns) {
    for (unsigned n : {1u, 2u, 3u, 9u, 30u}) {
      const Circuit c = build(d, n);
      std::int64_t toffolis = 0, ands = 0;
      for (const Gate& g : c.gates()) {
        toffolis += g.kind == GateKind::Toffoli;
        ands += g.kind == GateKind::TemporaryAnd;
      }
      EXPECT_EQ(count(lower(c)).t_count, 7 * toffolis + 4 * ands) << short_name(d) << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace qcla
