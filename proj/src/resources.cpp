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

#include "qcla/resources.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qcla {

unsigned hamming_weight(std::uint64_t n) { return static_cast<unsigned>(std::popcount(n)); }

unsigned floor_log2(std::uint64_t n) {
  if (n == 0) throw std::domain_error("floor_log2(0) is undefined");
  return static_cast<unsigned>(std::bit_width(n)) - 1;
}

// ---------------------------------------------------------------------------
// Counting and scheduling

Schedule schedule(const Circuit& circuit) {
  const auto offsets = circuit.register_offsets();
  std::vector<std::int64_t> qubit_layer(circuit.num_qubits(), 0);
  std::vector<std::int64_t> cbit_layer(circuit.num_cbits(), 0);
  std::vector<bool> has_t;

  Schedule s;
  for (const Gate& g : circuit.gates()) {
    std::int64_t layer = 0;
    for (QubitRef q : g.qubits()) layer = std::max(layer, qubit_layer[offsets[q.reg] + q.index]);
    if (g.cbit) layer = std::max(layer, cbit_layer[*g.cbit]);
    ++layer;
    for (QubitRef q : g.qubits()) qubit_layer[offsets[q.reg] + q.index] = layer;
    if (g.kind == GateKind::MeasureX) cbit_layer[*g.cbit] = layer;
    s.total_depth = std::max(s.total_depth, layer);
    if (g.kind == GateKind::T || g.kind == GateKind::Tdg) {
      if (has_t.size() < static_cast<std::size_t>(layer)) has_t.resize(layer, false);
      has_t[layer - 1] = true;
    }
  }
  s.t_depth = std::count(has_t.begin(), has_t.end(), true);
  return s;
}

ResourceReport count(const Circuit& circuit) {
  ResourceReport r;
  r.level = circuit.level();
  r.qubit_count = static_cast<std::int64_t>(circuit.num_qubits());
  for (const Gate& g : circuit.gates()) {
    ++r.histogram[g.kind];
    if (g.kind == GateKind::Cnot) ++r.cnot_count;
    if (g.kind == GateKind::MeasureX) ++r.measurement_count;
  }
  auto hist = [&](GateKind k) {
    auto it = r.histogram.find(k);
    return it == r.histogram.end() ? 0 : it->second;
  };
  r.t_count = hist(GateKind::T) + hist(GateKind::Tdg);
  Schedule s = schedule(circuit);
  r.total_depth = s.total_depth;
  r.t_depth = s.t_depth;
  return r;
}

// ---------------------------------------------------------------------------
// Cost forms

Rational CostForm::eval(std::uint64_t width) const {
  if (width == 0) throw std::domain_error("cost forms need n >= 1");
  if (uses_previous_width() && width < 2) throw std::domain_error("form uses n-1 and needs n >= 2");
  auto n = static_cast<std::int64_t>(width);
  Rational value = constant + this->n * n;
  if (n2.numerator() != 0) value += n2 * (n * n);
  if (n3.numerator() != 0) value += n3 * (n * n * n);
  value += w * static_cast<std::int64_t>(hamming_weight(width));
  value += log * static_cast<std::int64_t>(floor_log2(width));
  if (uses_previous_width()) {
    value += w1 * static_cast<std::int64_t>(hamming_weight(width - 1));
    value += log1 * static_cast<std::int64_t>(floor_log2(width - 1));
  }
  return value;
}

int CostForm::degree() const {
  if (n3.numerator() != 0) return 3;
  if (n2.numerator() != 0) return 2;
  if (n.numerator() != 0) return 1;
  return 0;
}

Rational CostForm::leading() const {
  switch (degree()) {
    case 3: return n3;
    case 2: return n2;
    case 1: return n;
    default: return constant;
  }
}

namespace {

struct FormBuilder {
  CostForm f;
  FormBuilder& n3(Rational v) { f.n3 = v; return *this; }
  FormBuilder& n2(Rational v) { f.n2 = v; return *this; }
  FormBuilder& n(Rational v) { f.n = v; return *this; }
  FormBuilder& w(Rational v) { f.w = v; return *this; }
  FormBuilder& w1(Rational v) { f.w1 = v; return *this; }
  FormBuilder& log(Rational v) { f.log = v; return *this; }
  FormBuilder& log1(Rational v) { f.log1 = v; return *this; }
  FormBuilder& c(Rational v) { f.constant = v; return *this; }
  operator CostForm() const { return f; }  // NOLINT
};

FormBuilder form() { return {}; }

std::vector<CostModel> make_catalog() {
  std::vector<CostModel> rows;
  auto add = [&](CostModel m) { rows.push_back(std::move(m)); };

  const CostForm draper_out_t = form().n(35).w(-21).log(-21).c(-7);
  const CostForm draper_q = form().n(4).w(-1).log(-1).c(1);
  const CostForm draper_in_t = form().n(70).w(-21).log(-21).w1(-21).log1(-21).c(-49);

  // Out-of-place.
  add({"Draper-out", "Draper et al.", false, draper_out_t, draper_q,
       "35n-21w(n)-21floor(log n)-7", "4n-w(n)-floor(log n)+1"});
  add({"Trisetyarso-out", "Trisetyarso et al.", false, draper_out_t, draper_q,
       "35n-21w(n)-21floor(log n)-7", "4n-w(n)-floor(log n)+1"});
  add({"Thapliyal-out", "Thapliyal et al.", false, form().n(35).c(-14), form().n(4).c(1), "35n-14", "4n+1"});
  add({"Babu-out", "Babu et al.", false, form().n(54), form().n(12).c(1), "54n", "12n+1"});
  add({"Lisa-out", "Lisa et al.", false, form().n(26), form().n(6).c(1), "26n", "6n+1"});
  add({"Out-FT-QCLA1", "Out-FT-QCLA1", false, form().n(16).w(-8).log(-8).c(-4),
       form().n(6).w(-2).log(-2), "16n-8w(n)-8floor(log n)-4", "6n-2w(n)-2floor(log n)"});
  add({"Out-FT-QCLA2", "Out-FT-QCLA2", false, form().n(22).w(-11).log(-11).c(-7), draper_q,
       "22n-11w(n)-11floor(log n)-7", "4n-w(n)-floor(log n)+1"});

  // In-place.
  add({"Draper-in", "Draper et al.", true, draper_in_t, draper_q,
       "70n-21w(n)-21floor(log n)-21w(n-1)-21floor(log(n-1))-49", "4n-w(n)-floor(log n)+1", false, false,
       2});
  add({"Trisetyarso-in", "Trisetyarso et al.", true, draper_in_t, draper_q,
       "70n-21w(n)-21floor(log n)-21w(n-1)-21floor(log(n-1))-49", "4n-w(n)-floor(log n)+1", false, false,
       2});
  add({"Thapliyal-in", "Thapliyal et al.", true, form().n(Rational(203, 4)).c(-28), form().n(4).c(1),
       "203/4 n-28", "4n+1"});
  add({"Takahashi08", "Takahashi et al. (2008)", true, form().n(196), form().n(5), "~196n", "~5n", true});
  add({"Takahashi10", "Takahashi et al. (2010)", true, form().n(49), form().n(5), "~49n", "~5n", true});
  add({"Cheng", "Cheng et al.", true,
       form().n3(Rational(14, 6)).n2(Rational(21, 6)).n(Rational(-49, 6)), form().n(3).c(1),
       "14/6 n^3+21/6 n^2-49/6 n", "3n+1"});
  add({"Mogensen1", "Mogensen (Design 1)", true, form().n(84).c(-56), form().n(3).c(-1), "~84n-56", "3n-1",
       true});
  add({"Mogensen2", "Mogensen (Design 2)", true, form().n(84).c(-56), form().n(3).log(-1).c(-1), "~84n-56",
       "3n-log(n)-1", true, true});
  add({"In-FT-QCLA1", "In-FT-QCLA1", true, form().n(20).w(-8).w1(-8).log(-4).log1(-4).c(-8),
       form().n(6).w(-2).log(-2), "20n-8w(n)-8w(n-1)-4floor(log n)-4floor(log(n-1))-8",
       "6n-2w(n)-2floor(log n)", false, false, 2});
  add({"In-FT-QCLA2", "In-FT-QCLA2", true,
       form().n(40).w(-11).log(-11).w1(-11).log1(-11).c(-32), draper_q,
       "40n-11w(n)-11floor(log n)-11w(n-1)-11floor(log(n-1))-32", "4n-w(n)-floor(log n)+1", false, false, 2});
  return rows;
}

}  // namespace

const std::vector<CostModel>& cost_catalog() {
  static const std::vector<CostModel> catalog = make_catalog();
  return catalog;
}

const CostModel& catalog_model(std::string_view label) {
  for (const auto& m : cost_catalog()) {
    if (m.label == label) return m;
  }
  throw std::invalid_argument(fmt::format("unknown catalog entry '{}'", label));
}

const CostModel& design_model(DesignId design) { return catalog_model(display_name(design)); }

CatalogCost catalog_cost(std::string_view label, std::uint64_t n) {
  const CostModel& m = catalog_model(label);
  if (n < m.min_n) throw std::domain_error(fmt::format("{} needs n >= {}", m.label, m.min_n));
  return {m.t.eval(n), m.qubits.eval(n), m.approximate};
}

// ---------------------------------------------------------------------------
// Per-step analysis

std::vector<StepCost> per_step_costs(DesignId design, std::uint64_t n) {
  if (n < min_formula_width(design)) {
    throw std::domain_error(fmt::format("{} formulas need n >= {}", display_name(design),
                                        min_formula_width(design)));
  }
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t w = hamming_weight(n);
  const std::int64_t lg = floor_log2(n);
  const bool pairs = uses_and_pairs(design);
  const std::string network = pairs ? "and-pair" : "toffoli";
  const std::int64_t network_t = pairs ? 4 : 7;

  std::vector<StepCost> steps = {
      {1, "and", nn, 4},
      {3, "and", nn - w - lg, 4},
      {4, network, nn - w, network_t},
      {5, network, nn - lg - 1, network_t},
  };
  if (is_in_place(design)) {
    const std::int64_t w1 = hamming_weight(n - 1);
    const std::int64_t lg1 = floor_log2(n - 1);
    steps.push_back({10, "and", nn - 1 - w1 - lg1, 4});
    steps.push_back({11, network, nn - lg1 - 2, network_t});
    steps.push_back({12, network, nn - 1 - w1, network_t});
  }
  return steps;
}

std::int64_t formula_tcount(DesignId design, std::uint64_t n, FormulaSource source) {
  if (n < min_formula_width(design)) {
    throw std::domain_error(fmt::format("{} formulas need n >= {}", display_name(design),
                                        min_formula_width(design)));
  }
  if (source == FormulaSource::PerStep) {
    std::int64_t total = 0;
    for (const auto& s : per_step_costs(design, n)) total += s.t_count();
    return total;
  }
  Rational v = design_model(design).t.eval(n);
  return boost::rational_cast<std::int64_t>(v);
}

std::int64_t formula_qubits(DesignId design, std::uint64_t n) {
  if (n < min_formula_width(design)) {
    throw std::domain_error(fmt::format("{} formulas need n >= {}", display_name(design),
                                        min_formula_width(design)));
  }
  return boost::rational_cast<std::int64_t>(design_model(design).qubits.eval(n));
}

// ---------------------------------------------------------------------------
// Savings

std::string SavingsFigure::render() const {
  if (!percent) return "asymptotic-dominance";
  return format_percent(*percent);
}

SavingsFigure savings(DesignId design, std::string_view baseline) {
  const CostModel& mine = design_model(design);
  const CostModel& base = catalog_model(baseline);
  SavingsFigure fig{mine.label, base.label, std::nullopt};
  if (base.t.degree() > 1) return fig;
  if (mine.t.degree() != 1 || base.t.degree() != 1) {
    throw std::invalid_argument("savings need linear-leading cost models");
  }
  fig.percent = Rational(100) * (Rational(1) - mine.t.leading() / base.t.leading());
  return fig;
}

std::vector<std::string> savings_baselines(DesignId design) {
  if (is_in_place(design)) {
    return {"Takahashi08", "Takahashi10", "Mogensen1", "Mogensen2", "Draper-in", "Trisetyarso-in",
            "Thapliyal-in"};
  }
  return {"Babu-out", "Lisa-out", "Draper-out", "Trisetyarso-out", "Thapliyal-out"};
}

Rational savings_average(DesignId design) {
  auto baselines = savings_baselines(design);
  Rational total(0);
  for (const auto& b : baselines) total += *savings(design, b).percent;
  return total / static_cast<std::int64_t>(baselines.size());
}

std::string format_percent(const Rational& value) {
  // floor(100 v + 1/2) hundredths.
  Rational scaled = value * 100 + Rational(1, 2);
  std::int64_t hundredths = scaled.numerator() / scaled.denominator();
  if (scaled.numerator() < 0 && scaled.numerator() % scaled.denominator() != 0) --hundredths;
  bool negative = hundredths < 0;
  std::int64_t mag = negative ? -hundredths : hundredths;
  return fmt::format("{}{}.{:02}", negative ? "-" : "", mag / 100, mag % 100);
}

double to_double(const Rational& value) {
  return static_cast<double>(value.numerator()) / static_cast<double>(value.denominator());
}

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) return fmt::format("{}", value.numerator());
  return fmt::format("{}/{}", value.numerator(), value.denominator());
}

}  // namespace qcla
