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

#include <gtest/gtest.h>

#include "qcla/lowering.hpp"

namespace qcla {
namespace {

BasisState bits(const Circuit& c, std::vector<std::uint8_t> b) {
  BasisState s = zero_state(c);
  s.bits = std::move(b);
  return s;
}

// q[2] plus one |0> ancilla, at Clifford+T level.
Circuit three_wire() {
  return Circuit::create({{"q", 2, {}, false}, {"m", 1, {AncillaInit::Zero}, true}}, Level::CliffordT);
}

TEST(StateVector, BasicGates) {
  StateVector sv = StateVector::basis(2, 0b01);
  sv.cnot(0, 1);
  EXPECT_DOUBLE_EQ(sv.probability_one(1), 1.0);
  sv.h(0);
  EXPECT_NEAR(sv.probability_one(0), 0.5, 1e-15);
  EXPECT_NEAR(sv.collapse(0, true), 0.5, 1e-15);
  EXPECT_NEAR(sv.norm(), 1.0, 1e-15);
  EXPECT_THROW(StateVector::basis(30, 0), StatevectorError);
}

TEST(Gadgets, MatchIdealAction) {
  for (Gadget g : {Gadget::ToffoliLowering, Gadget::AndLowering, Gadget::AndUncomputePair}) {
    const GadgetReport r = gadget_unitary_check(g);
    EXPECT_TRUE(r.pass) << gadget_name(g) << " deviation " << r.max_deviation;
    EXPECT_LT(r.max_deviation, 1e-10);
    EXPECT_GT(r.cases, 0);
  }
}

TEST(Simulate, AndOnOnesIsDeterministic) {
  Circuit c = three_wire();
  c.append(lower_temporary_and({0, 0}, {0, 1}, {1, 0}));
  c.labels().assign({1, 0}, WireLabel::s(0));
  const SvResult r = simulate(c, bits(c, {1, 1, 0}), MeasurementStrategy::all_branches());
  ASSERT_EQ(r.branches.size(), 1u);
  EXPECT_EQ(r.branches[0].readout.at(WireLabel::s(0)), 1);
  EXPECT_NEAR(r.branches[0].probability, 1.0, 1e-12);
}

TEST(Simulate, AndPairRestoresSuperposition) {
  Circuit c = three_wire();
  c.append(Gate::h({0, 0}));
  c.append(Gate::h({0, 1}));
  c.append(lower_temporary_and({0, 0}, {0, 1}, {1, 0}));
  c.append(lower_uncompute({0, 0}, {0, 1}, {1, 0}, c.new_cbit()));
  c.append(Gate::h({0, 0}));
  c.append(Gate::h({0, 1}));
  c.labels().assign({0, 0}, WireLabel::a(0));
  c.labels().assign({0, 1}, WireLabel::b(0));
  const SvResult r = simulate(c, bits(c, {0, 0, 0}), MeasurementStrategy::all_branches());
  ASSERT_EQ(r.branches.size(), 2u);
  EXPECT_EQ(r.branches[0].cbits, std::vector<std::uint8_t>{0});
  EXPECT_EQ(r.branches[1].cbits, std::vector<std::uint8_t>{1});
  for (const SvBranch& b : r.branches) {
    EXPECT_NEAR(b.probability, 0.5, 1e-12);
    EXPECT_EQ(b.readout.at(WireLabel::a(0)), 0);
    EXPECT_EQ(b.readout.at(WireLabel::b(0)), 0);
  }
  EXPECT_NEAR(r.total_probability, 1.0, 1e-12);
}

TEST(Simulate, OutOfPlaceOnePlusThree) {
  const Circuit c = lower(build(DesignId::OutFtQcla1, 2));
  const AdderLayout l = adder_layout(c);
  const SvResult r = simulate(c, adder_input(c, l, 1, 3), MeasurementStrategy::all_branches());
  ASSERT_GE(r.branches.size(), 2u);
  for (const SvBranch& b : r.branches) EXPECT_EQ(branch_sum(b, 2), (AdderSum{0, true}));
  EXPECT_NEAR(r.total_probability, 1.0, 1e-12);
  EXPECT_LT(r.max_norm_error, 1e-9);
}

TEST(Simulate, AgreesWithReversibleSimulator) {
  for (DesignId d : kAllDesigns) {
    for (unsigned n = 1; n <= 3; ++n) {
      const Circuit logical = build(d, n);
      const Circuit c = lower(logical);
      const AdderLayout l = adder_layout(c);
      const AdderLayout ll = adder_layout(logical);
      // Every branch for n <= 2; one seeded branch per input at n = 3.
      const auto strategy = n <= 2 ? MeasurementStrategy::all_branches() : MeasurementStrategy::seeded(n);
      for (std::uint64_t a = 0; a < (1u << n); ++a) {
        for (std::uint64_t b = 0; b < (1u << n); ++b) {
          const AdderSum expect = read_adder(ll, run_basis(logical, adder_input(logical, ll, a, b)), a, b).sum;
          ASSERT_EQ(expect, cla_reference(a, b, n));
          const SvResult r = simulate(c, adder_input(c, l, a, b), strategy);
          for (const SvBranch& br : r.branches) {
            EXPECT_EQ(branch_sum(br, n), expect) << short_name(d) << " n=" << n << " " << a << "+" << b;
          }
        }
      }
    }
  }
}

TEST(Simulate, SeededRandomIsDeterministic) {
  const Circuit c = lower(build(DesignId::InFtQcla2, 2));
  const AdderLayout l = adder_layout(c);
  const BasisState in = adder_input(c, l, 3, 3);
  const SvResult x = simulate(c, in, MeasurementStrategy::seeded(7));
  const SvResult y = simulate(c, in, MeasurementStrategy::seeded(7));
  ASSERT_EQ(x.branches.size(), 1u);
  EXPECT_EQ(x.branches[0].cbits, y.branches[0].cbits);
  EXPECT_EQ(branch_sum(x.branches[0], 2), (AdderSum{2, true}));
  // Different seeds reach different measurement records.
  bool differs = false;
  for (std::uint64_t s = 0; s < 16 && !differs; ++s) {
    differs = simulate(c, in, MeasurementStrategy::seeded(s)).branches[0].cbits != x.branches[0].cbits;
  }
  EXPECT_TRUE(differs);
}

TEST(Simulate, FixedOutcomes) {
  Circuit c = three_wire();
  c.append(Gate::h({0, 0}));
  c.append(lower_temporary_and({0, 0}, {0, 1}, {1, 0}));
  c.append(lower_uncompute({0, 0}, {0, 1}, {1, 0}, c.new_cbit()));
  c.append(Gate::h({0, 0}));
  c.labels().assign({0, 0}, WireLabel::a(0));
  for (std::uint8_t o : {0, 1}) {
    const SvResult r = simulate(c, bits(c, {0, 1, 0}), MeasurementStrategy::fixed({o}));
    ASSERT_EQ(r.branches.size(), 1u);
    EXPECT_EQ(r.branches[0].cbits[0], o);
    EXPECT_EQ(r.branches[0].readout.at(WireLabel::a(0)), 0);
  }
}

SvErrorKind error_of(const Circuit& c, const BasisState& in, const MeasurementStrategy& s,
                     const SvOptions& o = {}) {
  try {
    simulate(c, in, s, o);
  } catch (const StatevectorError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no StatevectorError";
  return SvErrorKind::LevelMismatch;
}

TEST(Simulate, Errors) {
  const Circuit logical = build(DesignId::OutFtQcla1, 2);
  EXPECT_EQ(error_of(logical, zero_state(logical), MeasurementStrategy::all_branches()), SvErrorKind::LevelMismatch);

  const Circuit c = lower(logical);
  SvOptions small;
  small.qubit_cap = 4;
  EXPECT_EQ(error_of(c, zero_state(c), MeasurementStrategy::all_branches(), small), SvErrorKind::QubitCap);
  EXPECT_EQ(error_of(c, zero_state(c), MeasurementStrategy::fixed({0, 0})), SvErrorKind::BadOutcomes);
  SvOptions narrow;
  narrow.branch_limit = 1;
  EXPECT_EQ(error_of(c, adder_input(c, adder_layout(c), 1, 3), MeasurementStrategy::all_branches(), narrow),
            SvErrorKind::BranchLimit);

  Circuit h = three_wire();
  h.append(Gate::h({0, 0}));
  h.labels().assign({0, 0}, WireLabel::s(0));
  EXPECT_EQ(error_of(h, zero_state(h), MeasurementStrategy::all_branches()), SvErrorKind::NonClassicalOutput);
}

}  // namespace
}  // namespace qcla
