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

// Acceptance runner: one PASS/FAIL line per criterion, full parameters.
// Expected values here are computed from independent closed forms or
// frozen literals rather than from the library's own cost tables.

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "qcla/builders.hpp"
#include "qcla/io.hpp"
#include "qcla/lowering.hpp"
#include "qcla/resources.hpp"
#include "qcla/reversible_sim.hpp"
#include "qcla/statevector.hpp"
#include "qcla/validation.hpp"

namespace {

using namespace qcla;
using Clock = std::chrono::steady_clock;

// Criteria that fail for documented reasons (see README). Anything else
// failing makes the runner exit nonzero.
const std::set<int> kKnownFailures = {8};

std::int64_t w(std::int64_t n) { return std::popcount(static_cast<std::uint64_t>(n)); }
std::int64_t lg(std::int64_t n) { return std::bit_width(static_cast<std::uint64_t>(n)) - 1; }

std::int64_t expected_t(DesignId d, std::int64_t n) {
  switch (d) {
    case DesignId::OutFtQcla1: return 16 * n - 8 * w(n) - 8 * lg(n) - 4;
    case DesignId::OutFtQcla2: return 22 * n - 11 * w(n) - 11 * lg(n) - 7;
    case DesignId::InFtQcla1: return 28 * n - 8 * w(n) - 8 * lg(n) - 8 * w(n - 1) - 8 * lg(n - 1) - 20;
    case DesignId::InFtQcla2: return 40 * n - 11 * (w(n) + lg(n) + w(n - 1) + lg(n - 1)) - 32;
  }
  return -1;
}

std::int64_t in1_table_t(std::int64_t n) { return 20 * n - 8 * w(n) - 8 * w(n - 1) - 4 * lg(n) - 4 * lg(n - 1) - 8; }

std::int64_t table_qubits(DesignId d, std::int64_t n) {
  if (d == DesignId::OutFtQcla1 || d == DesignId::InFtQcla1) return 6 * n - 2 * w(n) - 2 * lg(n);
  return 4 * n - w(n) - lg(n) + 1;
}

unsigned first_n(DesignId d) { return is_in_place(d) ? 2 : 1; }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(QCLA_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome tcount() {
  Outcome o;
  const auto start = Clock::now();
  for (DesignId d : kAllDesigns) {
    for (unsigned n = first_n(d); n <= 64; ++n) {
      const std::int64_t measured = count(lower(build(d, n))).t_count;
      if (measured != expected_t(d, n) || measured != formula_tcount(d, n, FormulaSource::PerStep)) {
        o.fail(fmt::format("{} n={}: measured {} expected {}", short_name(d), n, measured, expected_t(d, n)));
      }
      if (d != DesignId::InFtQcla1 && measured != formula_tcount(d, n, FormulaSource::Table)) {
        o.fail(fmt::format("{} n={}: table form disagrees", short_name(d), n));
      }
    }
  }
  const std::int64_t spot[3] = {count(lower(build(DesignId::OutFtQcla1, 8))).t_count,
                                count(lower(build(DesignId::OutFtQcla2, 8))).t_count,
                                count(lower(build(DesignId::InFtQcla2, 8))).t_count};
  if (spot[0] != 92 || spot[1] != 125 || spot[2] != 189) o.fail("spot values at n=8 differ from 92/125/189");
  const double t = seconds_since(start);
  if (t >= 10) o.fail(fmt::format("took {:.1f} s", t));
  if (o.pass) o.detail = fmt::format("n up to 64, spot 92/125/189, {:.2f} s", t);
  return o;
}

Outcome in1_gap() {
  Outcome o;
  for (std::int64_t n = 2; n <= 64; ++n) {
    const std::int64_t gap = 8 * n - 4 * lg(n) - 4 * lg(n - 1) - 12;
    const std::int64_t table = formula_tcount(DesignId::InFtQcla1, n, FormulaSource::Table);
    const std::int64_t step = formula_tcount(DesignId::InFtQcla1, n, FormulaSource::PerStep);
    if (table != in1_table_t(n) || step - table != gap) o.fail(fmt::format("n={}: {} - {} != {}", n, step, table, gap));
  }
  if (formula_tcount(DesignId::InFtQcla1, 8, FormulaSource::PerStep) != 132 ||
      formula_tcount(DesignId::InFtQcla1, 8, FormulaSource::Table) != 100) {
    o.fail("n=8 is not 132 vs 100");
  }
  const auto ledger = discrepancy_ledger();
  bool recorded = false;
  for (const auto& d : ledger) recorded |= d.id == "InFtQcla1-TableIV" && d.reproduced;
  if (!recorded) o.fail("gap missing from the ledger");
  if (o.pass) o.detail = "gap 8n-4L-4L'-12 for n=2..64 (32 at n=8), ledgered";
  return o;
}

Outcome qubits() {
  Outcome o;
  const auto deltas = read_qubit_deltas(std::string(QCLA_GOLDEN_DIR) + "/qubit_deltas.txt");
  const std::int64_t at8[4] = {40, 29, 40, 29};
  for (DesignId d : kAllDesigns) {
    const auto it = deltas.find(d);
    if (it == deltas.end()) {
      o.fail(fmt::format("no golden delta for {}", short_name(d)));
      continue;
    }
    if (table_qubits(d, 8) != at8[static_cast<int>(d)]) o.fail("table values at n=8");
    for (unsigned n = first_n(d); n <= 64; ++n) {
      const std::int64_t delta = static_cast<std::int64_t>(build(d, n).num_qubits()) - table_qubits(d, n);
      if (delta != it->second || std::abs(delta) > 1) {
        o.fail(fmt::format("{} n={}: delta {} golden {}", short_name(d), n, delta, it->second));
      }
    }
  }
  if (o.pass) o.detail = "constant deltas out1 0, out2 0, in1 -1, in2 -1 for n <= 64";
  return o;
}

Outcome functional() {
  Outcome o;
  const auto start = Clock::now();
  for (unsigned n = 1; n <= 6; ++n) {
    for (std::uint64_t a = 0; a < (1u << n); ++a) {
      for (std::uint64_t b = 0; b < (1u << n); ++b) {
        const AdderSum r = cla_reference(a, b, n);
        if (r.low + (std::uint64_t{r.carry} << n) != a + b) o.fail("reference disagrees with a+b");
      }
    }
  }
  std::uint64_t pairs = 0;
  for (DesignId d : kAllDesigns) {
    for (unsigned n = 1; n <= 6; ++n) {
      const CheckReport r = exhaustive_check(d, n);
      pairs += r.total;
      if (!r.ok() || r.total != (std::uint64_t{1} << (2 * n)) || !r.assertion_failures.empty()) {
        o.fail(fmt::format("{} n={}: {}/{}", short_name(d), n, r.passed, r.total));
      }
    }
  }
  const double t = seconds_since(start);
  if (t >= 60) o.fail(fmt::format("took {:.1f} s", t));
  if (o.pass) o.detail = fmt::format("{} pairs, {:.2f} s", pairs, t);
  return o;
}

Outcome gadgets() {
  Outcome o;
  double worst = 0;
  for (Gadget g : {Gadget::ToffoliLowering, Gadget::AndLowering, Gadget::AndUncomputePair}) {
    const GadgetReport r = gadget_unitary_check(g);
    worst = std::max(worst, r.max_deviation);
    if (!r.pass || !(r.max_deviation < 1e-10)) o.fail(fmt::format("{} deviation {:g}", gadget_name(g), r.max_deviation));
  }
  if (o.pass) o.detail = fmt::format("max deviation {:.1e}", worst);
  return o;
}

Outcome statevector() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(default_seed());
  std::size_t branches = 0;
  for (DesignId d : kAllDesigns) {
    for (unsigned n : {2u, 3u}) {
      const Circuit c = lower(build(d, n));
      const AdderLayout l = adder_layout(c);
      for (int k = 0; k < 10; ++k) {
        const std::uint64_t a = rng() % (1u << n), b = rng() % (1u << n);
        const SvResult r = simulate(c, adder_input(c, l, a, b), MeasurementStrategy::all_branches());
        branches += r.branches.size();
        if (std::abs(r.total_probability - 1) > 1e-9) o.fail("branch probabilities do not sum to 1");
        for (const SvBranch& br : r.branches) {
          const AdderSum s = branch_sum(br, n);
          if (s.low + (std::uint64_t{s.carry} << n) != a + b) {
            o.fail(fmt::format("{} n={}: {}+{} read {}", short_name(d), n, a, b, s.low));
          }
        }
      }
    }
  }
  const double t = seconds_since(start);
  if (t >= 300) o.fail(fmt::format("took {:.1f} s", t));
  if (o.pass) o.detail = fmt::format("{} branches, all correct, {:.2f} s", branches, t);
  return o;
}

Outcome savings_figures() {
  Outcome o;
  // Leading T-count coefficients.
  const std::map<std::string, double> base = {
      {"Babu-out", 54},    {"Lisa-out", 26},     {"Draper-out", 35},       {"Trisetyarso-out", 35},
      {"Thapliyal-out", 35}, {"Takahashi08", 196}, {"Takahashi10", 49},     {"Mogensen1", 84},
      {"Mogensen2", 84},   {"Draper-in", 70},    {"Trisetyarso-in", 70},   {"Thapliyal-in", 203.0 / 4}};
  const std::map<DesignId, double> ours = {
      {DesignId::OutFtQcla1, 16}, {DesignId::OutFtQcla2, 22}, {DesignId::InFtQcla1, 20}, {DesignId::InFtQcla2, 40}};
  auto pct = [&](DesignId d, const std::string& b) { return 100 * (1 - ours.at(d) / base.at(b)); };

  struct Quote {
    DesignId d;
    const char* baseline;
    double value;
  };
  const Quote quotes[] = {
      {DesignId::OutFtQcla1, "Babu-out", 70.37},   {DesignId::OutFtQcla1, "Lisa-out", 38.46},
      {DesignId::OutFtQcla1, "Draper-out", 54.29}, {DesignId::OutFtQcla2, "Babu-out", 59.26},
      {DesignId::OutFtQcla2, "Lisa-out", 15.38},   {DesignId::OutFtQcla2, "Draper-out", 37.14},
      {DesignId::InFtQcla1, "Takahashi08", 89.80}, {DesignId::InFtQcla1, "Takahashi10", 59.18},
      {DesignId::InFtQcla1, "Mogensen1", 76.19},   {DesignId::InFtQcla1, "Draper-in", 71.43},
      {DesignId::InFtQcla1, "Thapliyal-in", 60.59}, {DesignId::InFtQcla2, "Thapliyal-in", 21.18},
  };
  for (const Quote& q : quotes) {
    const SavingsFigure f = savings(q.d, q.baseline);
    if (!f.percent || std::abs(to_double(*f.percent) - q.value) > 0.01 + 1e-9 ||
        std::abs(pct(q.d, q.baseline) - q.value) > 0.01 + 1e-9) {
      o.fail(fmt::format("{} vs {}: {} quoted {:.2f}", short_name(q.d), q.baseline, f.render(), q.value));
    }
  }
  const std::vector<std::string> out_rows = {"Babu-out", "Lisa-out", "Draper-out", "Trisetyarso-out", "Thapliyal-out"};
  const std::vector<std::string> in_rows = {"Takahashi08", "Takahashi10",    "Mogensen1",   "Mogensen2",
                                            "Draper-in",   "Trisetyarso-in", "Thapliyal-in"};
  auto mean = [&](DesignId d) {
    const auto& rows = is_in_place(d) ? in_rows : out_rows;
    double s = 0;
    for (const auto& b : rows) s += pct(d, b);
    return s / static_cast<double>(rows.size());
  };
  const std::pair<DesignId, double> averages[] = {
      {DesignId::OutFtQcla1, 54.34}, {DesignId::OutFtQcla2, 37.21}, {DesignId::InFtQcla1, 72.11}};
  for (auto [d, v] : averages) {
    const double lib = to_double(savings_average(d));
    if (std::abs(lib - v) > 0.01 + 1e-9 || std::abs(mean(d) - lib) > 1e-9) {
      o.fail(fmt::format("{} average {:.4f} quoted {:.2f}", short_name(d), lib, v));
    }
  }
  if (!savings(DesignId::InFtQcla1, "Cheng").asymptotic_dominance()) o.fail("cubic baseline gave a percentage");
  const std::string in2 = format_percent(savings_average(DesignId::InFtQcla2));
  if (in2 != "44.23") o.fail(fmt::format("in2 average {}", in2));
  if (o.pass) o.detail = fmt::format("12 figures and 3 averages within 0.01; in2 average 35.87 unreproduced (computed {})", in2);
  return o;
}

Outcome depth() {
  Outcome o;
  std::vector<std::string> notes;
  for (DesignId d : kAllDesigns) {
    for (bool lowered : {false, true}) {
      std::vector<std::int64_t> v;
      for (unsigned n = 4; n <= 1024; n *= 2) {
        const Circuit c = build(d, n);
        v.push_back(lowered ? schedule(lower(c)).t_depth : schedule(c).total_depth);
      }
      // Fit through (L=2, v[0]) and (L=3, v[1]).
      const std::int64_t alpha = v[1] - v[0], beta = v[0] - 2 * alpha;
      const char* what = lowered ? "T-depth" : "Toffoli depth";
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::int64_t L = static_cast<std::int64_t>(i) + 2;
        if (i > 0 && v[i] < v[i - 1]) o.fail(fmt::format("{} {} decreases", short_name(d), what));
        if (v[i] > alpha * L + beta) {
          notes.push_back(fmt::format("{} {} {} > {} at n={}", short_name(d), what, v[i], alpha * L + beta, 4 << i));
          o.pass = false;
          break;
        }
      }
    }
  }
  if (!notes.empty()) {
    std::string s;
    for (const auto& n : notes) s += (s.empty() ? "" : "; ") + n;
    o.detail = o.detail.empty() ? s : o.detail + "; " + s;
  } else if (o.pass) {
    o.detail = "all depths within the fitted bound up to n=1024";
  }
  return o;
}

Outcome roundtrip() {
  Outcome o;
  for (DesignId d : kAllDesigns) {
    for (unsigned n : {1u, 2u, 4u}) {
      const Circuit t = build(d, n);
      const Circuit c = lower(t);
      const std::string q = to_qasm3(c), j = to_json(t), jl = to_json(c);
      if (q != to_qasm3(lower(build(d, n))) || j != to_json(build(d, n))) o.fail("export not byte-stable");
      for (const auto& [orig, back] : {std::pair{&c, parse_qasm3(q)}, std::pair{&t, parse_json(j)},
                                       std::pair{&c, parse_json(jl)}}) {
        if (!orig->same_structure(back) || !std::ranges::equal(orig->gates(), back.gates()) || !(orig->labels() == back.labels()) ||
            orig->registers() != back.registers()) {
          o.fail(fmt::format("{} n={}: round trip changed the circuit", short_name(d), n));
        }
      }
    }
  }
  if (to_qasm3(lower(build(DesignId::OutFtQcla1, 2))) != golden("out1_n2_cliffordt.qasm")) o.fail("golden QASM");
  if (to_json(build(DesignId::OutFtQcla1, 2)) != golden("out1_n2_toffoli.json")) o.fail("golden JSON");
  if (o.pass) o.detail = "QASM3 and JSON stable, structural round trip n in {1,2,4}, golden match";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"T-count conformance", tcount},   {"In1 table gap", in1_gap},
      {"qubit conformance", qubits},     {"functional correctness", functional},
      {"gadget certification", gadgets}, {"statevector determinism", statevector},
      {"savings reproduction", savings_figures}, {"depth property", depth},
      {"round trip", roundtrip},
  };
  int unexpected = 0;
  int id = 0;
  for (const auto& [title, run] : criteria) {
    ++id;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(fmt::format("exception: {}", e.what()));
    }
    const bool known = kKnownFailures.contains(id);
    fmt::print("{} {} {}: {}{}\n", o.pass ? "PASS" : "FAIL", id, title, o.detail,
               !o.pass && known ? " [known failure]" : "");
    unexpected += !o.pass && !known;
  }
  return unexpected == 0 ? 0 : 1;
}
