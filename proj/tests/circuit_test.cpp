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

#include <gtest/gtest.h>

namespace qcla {
namespace {

using Z = AncillaInit;

Circuit adder_shaped() {
  return Circuit::create({{"A", 2, {}, false}, {"B", 2, {}, false}, {"X", 3, {Z::Zero, Z::MagicA, Z::MagicA}, true}});
}

TEST(Circuit, CreateEchoesRegisters) {
  Circuit c = adder_shaped();
  EXPECT_EQ(c.num_qubits(), 7u);
  EXPECT_EQ(c.num_gates(), 0u);
  EXPECT_EQ(c.init_of(c.qubit("X", 0)), Z::Zero);
  EXPECT_EQ(c.init_of(c.qubit("X", 2)), Z::MagicA);
  EXPECT_TRUE(c.is_ancilla(c.qubit("X", 1)));
  EXPECT_FALSE(c.is_ancilla(c.qubit("B", 1)));
  EXPECT_EQ(c.flat_index(c.qubit("X", 0)), 4u);
  EXPECT_EQ(c.qubit_name(c.qubit("B", 1)), "B[1]");
}

TEST(Circuit, EmptyCircuit) {
  Circuit c = Circuit::create({});
  EXPECT_EQ(c.num_qubits(), 0u);
}

TEST(Circuit, DuplicateRegisterRejected) {
  EXPECT_THROW(Circuit::create({{"A", 1, {}, false}, {"A", 2, {}, false}}), CircuitError);
}

TEST(Circuit, InitListMustMatchLength) {
  EXPECT_THROW(Circuit::create({{"X", 2, {Z::Zero}, true}}), CircuitError);
}

TEST(Circuit, AppendValidates) {
  Circuit c = Circuit::create({{"A", 1, {}, false}, {"B", 1, {}, false}});
  const QubitRef a = c.qubit("A", 0);
  const QubitRef b = c.qubit("B", 0);
  c.append(Gate::cnot(a, b));
  EXPECT_EQ(c.num_gates(), 1u);

  EXPECT_THROW(c.append(Gate::toffoli(a, a, b)), CircuitError);
  EXPECT_THROW(c.append(Gate::h(a)), CircuitError);
  EXPECT_THROW(c.append(Gate::x(QubitRef{0, 5})), CircuitError);
  EXPECT_THROW(c.qubit("C", 0), CircuitError);
}

TEST(Circuit, LevelMembership) {
  for (GateKind k : {GateKind::Toffoli, GateKind::TemporaryAnd, GateKind::Uncompute}) {
    EXPECT_TRUE(allowed_at(k, Level::Toffoli));
    EXPECT_FALSE(allowed_at(k, Level::CliffordT));
  }
  for (GateKind k : {GateKind::H, GateKind::T, GateKind::Tdg, GateKind::S, GateKind::Sdg, GateKind::Z, GateKind::Cz,
                     GateKind::MeasureX, GateKind::ClassicallyControlledCz}) {
    EXPECT_FALSE(allowed_at(k, Level::Toffoli));
    EXPECT_TRUE(allowed_at(k, Level::CliffordT));
  }
  for (GateKind k : {GateKind::Not, GateKind::Cnot, GateKind::Reset}) {
    EXPECT_TRUE(allowed_at(k, Level::Toffoli));
    EXPECT_TRUE(allowed_at(k, Level::CliffordT));
  }
}

TEST(Circuit, ClassicalBitsMustExist) {
  Circuit c = Circuit::create({{"q", 3, {}, false}}, Level::CliffordT);
  EXPECT_THROW(c.append(Gate::measure_x({0, 0}, 0)), CircuitError);
  const auto bit = c.new_cbit();
  c.append(Gate::measure_x({0, 0}, bit));
  c.append(Gate::classically_controlled_cz(bit, {0, 1}, {0, 2}));
  EXPECT_EQ(c.num_cbits(), 1u);
}

class AllocatorTest : public ::testing::Test {
 protected:
  void SetUp() override {
    c = Circuit::create({{"A", 2, {}, false}, {"Z", 0, {}, true}});
    c.set_ancilla_pool("Z");
  }
  Circuit c;
};

TEST_F(AllocatorTest, FreshGrowsPool) {
  for (int i = 0; i < 3; ++i) c.allocate_ancilla(Z::MagicA);
  EXPECT_EQ(c.registers()[1].size(), 3u);
}

TEST_F(AllocatorTest, ReuseReturnsFreedQubit) {
  const QubitRef q = c.allocate_ancilla(Z::MagicA);
  c.free_ancilla(q);
  EXPECT_EQ(c.allocate_ancilla(Z::MagicA, AllocPolicy::Reuse), q);
  EXPECT_EQ(c.gates().back(), Gate::reset(q));
  EXPECT_EQ(c.registers()[1].size(), 1u);
}

TEST_F(AllocatorTest, FreshIgnoresFreedQubits) {
  const QubitRef q = c.allocate_ancilla(Z::MagicA);
  c.free_ancilla(q);
  EXPECT_NE(c.allocate_ancilla(Z::MagicA), q);
  EXPECT_EQ(c.registers()[1].size(), 2u);
}

TEST_F(AllocatorTest, ReuseMatchesInitAndIsFirstInFirstOut) {
  const QubitRef zero = c.allocate_ancilla(Z::Zero);
  const QubitRef m1 = c.allocate_ancilla(Z::MagicA);
  const QubitRef m2 = c.allocate_ancilla(Z::MagicA);
  c.free_ancilla(m2);
  c.free_ancilla(zero);
  c.free_ancilla(m1);
  EXPECT_EQ(c.allocate_ancilla(Z::MagicA, AllocPolicy::Reuse), m2);
  EXPECT_EQ(c.allocate_ancilla(Z::MagicA, AllocPolicy::Reuse), m1);
  EXPECT_EQ(c.allocate_ancilla(Z::Zero, AllocPolicy::Reuse), zero);
  EXPECT_THROW(c.free_ancilla(c.qubit("A", 0)), CircuitError);
}

TEST(WireLabel, RoundTripsThroughText) {
  for (WireLabel l : {WireLabel::a(3), WireLabel::b(0), WireLabel::p(2, 4), WireLabel::g(0, 8), WireLabel::s(5),
                      WireLabel::free(), WireLabel::spent()}) {
    EXPECT_EQ(WireLabel::parse(l.to_string()), l) << l.to_string();
  }
  EXPECT_EQ(WireLabel::p(2, 4).to_string(), "p[2,4]");
  EXPECT_EQ(WireLabel::s(1).to_string(), "s_1");
}

TEST(WireNameMap, LabelsAreUniqueButRenameKeepsQubit) {
  WireNameMap m;
  m.assign({0, 0}, WireLabel::g(2, 3));
  EXPECT_THROW(m.assign({0, 1}, WireLabel::g(2, 3)), CircuitError);
  m.assign({0, 1}, WireLabel::free());
  m.assign({0, 2}, WireLabel::free());

  EXPECT_EQ(m.rename(WireLabel::g(2, 3), WireLabel::g(0, 3)), (QubitRef{0, 0}));
  EXPECT_FALSE(m.find(WireLabel::g(2, 3)));
  EXPECT_EQ(m.at(WireLabel::g(0, 3)), (QubitRef{0, 0}));
  EXPECT_THROW(m.at(WireLabel::s(0)), CircuitError);
}

TEST(Circuit, SameStructureIgnoresLabels) {
  Circuit a = adder_shaped();
  Circuit b = adder_shaped();
  a.labels().assign(a.qubit("A", 0), WireLabel::a(0));
  EXPECT_TRUE(a.same_structure(b));
  b.append(Gate::x(b.qubit("A", 0)));
  EXPECT_FALSE(a.same_structure(b));
}

}  // namespace
}  // namespace qcla
