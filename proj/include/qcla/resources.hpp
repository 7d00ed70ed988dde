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

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcla/builders.hpp"
#include "qcla/circuit.hpp"

namespace qcla {

using Rational = boost::rational<std::int64_t>;

/// Number of ones in the binary expansion of n.
unsigned hamming_weight(std::uint64_t n);
/// Bit length of n minus one. Throws std::domain_error for n == 0.
unsigned floor_log2(std::uint64_t n);

struct ResourceReport {
  Level level = Level::Toffoli;
  std::int64_t t_count = 0;
  std::int64_t t_depth = 0;
  std::int64_t total_depth = 0;
  std::int64_t qubit_count = 0;
  std::int64_t cnot_count = 0;
  std::int64_t measurement_count = 0;
  std::map<GateKind, std::int64_t> histogram;
};

struct Schedule {
  std::int64_t total_depth = 0;
  std::int64_t t_depth = 0;
};

/// ASAP layering. A gate sits one layer after the latest gate sharing a
/// qubit with it or producing a classical bit it reads. Every gate counts
/// as one layer unit, so on Toffoli-level circuits the depth is measured in
/// logical gates.
Schedule schedule(const Circuit& circuit);

/// Single-pass counts plus the schedule. T fields are zero for
/// Toffoli-level circuits.
ResourceReport count(const Circuit& circuit);

/// Closed-form cost over the basis {n^3, n^2, n, w(n), w(n-1), floor(log n),
/// floor(log(n-1)), 1} with exact rational coefficients.
struct CostForm {
  Rational n3{0}, n2{0}, n{0}, w{0}, w1{0}, log{0}, log1{0}, constant{0};

  /// Throws std::domain_error when a term needs n-1 >= 1 and n < 2.
  Rational eval(std::uint64_t width) const;
  int degree() const;
  Rational leading() const;
  bool uses_previous_width() const { return w1.numerator() != 0 || log1.numerator() != 0; }
};

struct CostModel {
  std::string label;
  std::string source;  // design name as cited
  bool in_place = false;
  CostForm t;
  CostForm qubits;
  std::string t_printed;
  std::string qubits_printed;
  /// Printed with "approximately".
  bool approximate = false;
  /// Printed qubit form writes log(n) without a floor.
  bool unfloored_log = false;
  unsigned min_n = 1;
};

/// Prior-work rows plus the four proposed designs.
const std::vector<CostModel>& cost_catalog();
/// Throws std::invalid_argument for an unknown label.
const CostModel& catalog_model(std::string_view label);
const CostModel& design_model(DesignId design);

struct CatalogCost {
  Rational t;
  Rational qubits;
  bool approximate = false;
};
CatalogCost catalog_cost(std::string_view label, std::uint64_t n);

enum class FormulaSource : std::uint8_t { Table, PerStep };

/// One step of a per-step T-count analysis.
struct StepCost {
  int step = 0;
  std::string gadget;  // "and", "and-pair", "toffoli"
  std::int64_t gates = 0;
  std::int64_t t_per_gate = 0;
  std::int64_t t_count() const { return gates * t_per_gate; }
};
std::vector<StepCost> per_step_costs(DesignId design, std::uint64_t n);

/// Throws std::domain_error below min_formula_width(design).
std::int64_t formula_tcount(DesignId design, std::uint64_t n, FormulaSource source);
std::int64_t formula_qubits(DesignId design, std::uint64_t n);

struct SavingsFigure {
  std::string design;
  std::string baseline;
  /// Empty when the baseline grows faster than linearly.
  std::optional<Rational> percent;
  bool asymptotic_dominance() const { return !percent.has_value(); }
  std::string render() const;
};

/// 100 (1 - a/b) on the leading coefficients of the Table T-count forms.
SavingsFigure savings(DesignId design, std::string_view baseline);

/// Baselines averaged for a design: five out-of-place rows, seven in-place
/// rows (Mogensen counted twice, Draper and Trisetyarso separately).
std::vector<std::string> savings_baselines(DesignId design);
Rational savings_average(DesignId design);

/// Two decimals, round half up.
std::string format_percent(const Rational& value);
double to_double(const Rational& value);
std::string format_rational(const Rational& value);

}  // namespace qcla
