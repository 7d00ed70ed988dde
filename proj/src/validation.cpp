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

#include "qcla/validation.hpp"

#include <fmt/format.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "qcla/io.hpp"
#include "qcla/lowering.hpp"
#include "qcla/reversible_sim.hpp"
#include "qcla/statevector.hpp"

namespace qcla {

ConformanceRow conformance_row(DesignId design, unsigned n) {
  ConformanceRow row{design, n};
  const ResourceReport r = count(lower(build(design, n)));
  row.measured_t = r.t_count;
  row.measured_qubits = r.qubit_count;
  row.per_step_t = formula_tcount(design, n, FormulaSource::PerStep);
  row.table_t = formula_tcount(design, n, FormulaSource::Table);
  row.table_qubits = formula_qubits(design, n);
  return row;
}

const std::vector<QuotedFigure>& quoted_savings() {
  using D = DesignId;
  static const std::vector<QuotedFigure> figures = {
      {D::OutFtQcla1, "Babu-out", "70.37"},       {D::OutFtQcla1, "Lisa-out", "38.46"},
      {D::OutFtQcla1, "Draper-out", "54.29"},     {D::OutFtQcla2, "Babu-out", "59.26"},
      {D::OutFtQcla2, "Lisa-out", "15.38"},       {D::OutFtQcla2, "Draper-out", "37.14"},
      {D::InFtQcla1, "Takahashi08", "89.80"},     {D::InFtQcla1, "Takahashi10", "59.18"},
      {D::InFtQcla1, "Mogensen1", "76.19"},       {D::InFtQcla1, "Draper-in", "71.43"},
      {D::InFtQcla1, "Thapliyal-in", "60.59"},    {D::InFtQcla2, "Thapliyal-in", "21.18"},
  };
  return figures;
}

const std::vector<QuotedFigure>& quoted_averages() {
  static const std::vector<QuotedFigure> figures = {
      {DesignId::OutFtQcla1, "", "54.34"},
      {DesignId::OutFtQcla2, "", "37.21"},
      {DesignId::InFtQcla1, "", "72.11"},
      {DesignId::InFtQcla2, "", "35.87"},
  };
  return figures;
}

namespace {

bool within_hundredth(const Rational& value, const std::string& quoted) {
  const double q = std::stod(quoted);
  return std::abs(to_double(value) - q) <= 0.01 + 1e-12;
}

std::vector<unsigned> depth_widths(bool full) {
  std::vector<unsigned> ns;
  for (unsigned n = 4; n <= (full ? 1024u : 256u); n *= 2) ns.push_back(n);
  return ns;
}

/// Non-decreasing and within the line through the n = 4 and n = 8 points.
bool log_bounded(const std::vector<unsigned>& ns, const std::vector<std::int64_t>& d, std::string& why) {
  const std::int64_t alpha = d[1] - d[0];
  const std::int64_t beta = d[0] - alpha * floor_log2(ns[0]);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i > 0 && d[i] < d[i - 1]) {
      why = fmt::format("decreases at n={}", ns[i]);
      return false;
    }
    const std::int64_t bound = alpha * floor_log2(ns[i]) + beta;
    if (d[i] > bound) {
      why = fmt::format("n={}: {} > {}*{}{:+} (growth per doubling at n={}: {:+})", ns[i], d[i], alpha,
                        floor_log2(ns[i]), beta, ns.back(), d.back() - d[d.size() - 2]);
      return false;
    }
  }
  why = fmt::format("alpha={} beta={}", alpha, beta);
  return true;
}

CriterionResult c1_tcount(const ValidationOptions&) {
  CriterionResult r{1, "T-count conformance", true, ""};
  int checked = 0;
  for (DesignId d : kAllDesigns) {
    for (unsigned n = min_formula_width(d); n <= 64; ++n) {
      const ConformanceRow row = conformance_row(d, n);
      ++checked;
      const bool table_ok = d == DesignId::InFtQcla1 || row.table_t == row.measured_t;
      if (row.measured_t != row.per_step_t || !table_ok) {
        r.pass = false;
        r.detail = fmt::format("{} n={}: measured {} per-step {} table {}", display_name(d), n, row.measured_t,
                               row.per_step_t, row.table_t);
        return r;
      }
    }
  }
  r.detail = fmt::format("{} (design, n) pairs; n=8: {} {} {}", checked,
                         conformance_row(DesignId::OutFtQcla1, 8).measured_t,
                         conformance_row(DesignId::OutFtQcla2, 8).measured_t,
                         conformance_row(DesignId::InFtQcla2, 8).measured_t);
  return r;
}

CriterionResult c2_in1_gap(const ValidationOptions&) {
  CriterionResult r{2, "In-FT-QCLA1 table/per-step gap", true, ""};
  for (unsigned n = 2; n <= 64; ++n) {
    const std::int64_t gap = formula_tcount(DesignId::InFtQcla1, n, FormulaSource::PerStep) -
                             formula_tcount(DesignId::InFtQcla1, n, FormulaSource::Table);
    const std::int64_t want = 8 * std::int64_t{n} - 4 * floor_log2(n) - 4 * floor_log2(n - 1) - 12;
    if (gap != want) {
      r.pass = false;
      r.detail = fmt::format("n={}: gap {} expected {}", n, gap, want);
      return r;
    }
  }
  const auto ledger = discrepancy_ledger();
  r.pass = ledger.front().id == "InFtQcla1-TableIV" && ledger.front().reproduced;
  r.detail = fmt::format("gap 8n-4L-4L'-12 for n=2..64; n=8: {} - {}",
                         formula_tcount(DesignId::InFtQcla1, 8, FormulaSource::PerStep),
                         formula_tcount(DesignId::InFtQcla1, 8, FormulaSource::Table));
  return r;
}

CriterionResult c3_qubits(const ValidationOptions& o) {
  CriterionResult r{3, "qubit conformance", true, ""};
  std::string deltas;
  for (DesignId d : kAllDesigns) {
    std::optional<std::int64_t> delta;
    for (unsigned n = min_formula_width(d); n <= 64; ++n) {
      const std::int64_t measured = count(build(d, n)).qubit_count;
      const std::int64_t dn = measured - formula_qubits(d, n);
      if (std::abs(dn) > 1 || (delta && *delta != dn)) {
        r.pass = false;
        r.detail = fmt::format("{} n={}: delta {}", display_name(d), n, dn);
        return r;
      }
      delta = dn;
    }
    auto golden = o.golden_qubit_delta.find(d);
    if (golden != o.golden_qubit_delta.end() && golden->second != *delta) {
      r.pass = false;
      r.detail = fmt::format("{}: delta {} but golden {}", display_name(d), *delta, golden->second);
      return r;
    }
    deltas += fmt::format("{}{}={:+}", deltas.empty() ? "" : " ", short_name(d), *delta);
  }
  r.detail = fmt::format("deltas {}; table n=8: {} {} {} {}{}", deltas,
                         formula_qubits(DesignId::OutFtQcla1, 8), formula_qubits(DesignId::OutFtQcla2, 8),
                         formula_qubits(DesignId::InFtQcla1, 8), formula_qubits(DesignId::InFtQcla2, 8),
                         o.golden_qubit_delta.empty() ? " (no golden file)" : "");
  return r;
}

CriterionResult c4_functional(const ValidationOptions& o) {
  CriterionResult r{4, "functional correctness", true, ""};
  const unsigned top = o.full ? 6 : 4;
  std::uint64_t runs = 0;
  for (DesignId d : kAllDesigns) {
    for (unsigned n = 1; n <= top; ++n) {
      const CheckReport rep = exhaustive_check(d, n, top);
      runs += rep.total;
      if (!rep.ok()) {
        r.pass = false;
        r.detail = fmt::format("{} n={}: {}/{} pass, {} assertion failures{}", display_name(d), n, rep.passed,
                               rep.total, rep.assertion_failures.size(), rep.labels_ok ? "" : ", labels misplaced");
        return r;
      }
    }
  }
  r.detail = fmt::format("{} exhaustive runs, n <= {}", runs, top);
  return r;
}

CriterionResult c5_gadgets(const ValidationOptions&) {
  CriterionResult r{5, "gadget certification", true, ""};
  for (Gadget g : {Gadget::ToffoliLowering, Gadget::AndLowering, Gadget::AndUncomputePair}) {
    const GadgetReport rep = gadget_unitary_check(g);
    r.pass = r.pass && rep.pass;
    r.detail += fmt::format("{}{} {:.1e}", r.detail.empty() ? "" : "; ", gadget_name(g), rep.max_deviation);
  }
  return r;
}

CriterionResult c6_statevector(const ValidationOptions& o) {
  CriterionResult r{6, "end-to-end determinism", true, ""};
  std::mt19937_64 rng(o.seed);
  std::size_t branches = 0;
  const std::vector<unsigned> widths = o.full ? std::vector<unsigned>{2, 3} : std::vector<unsigned>{2};
  const int inputs = o.full ? 10 : 3;
  for (DesignId d : kAllDesigns) {
    for (unsigned n : widths) {
      const Circuit toffoli = build(d, n);
      const Circuit lowered = lower(toffoli);
      const AdderLayout layout = adder_layout(toffoli);
      for (int k = 0; k < inputs; ++k) {
        const std::uint64_t a = rng() % (1u << n);
        const std::uint64_t b = rng() % (1u << n);
        const SvResult res = simulate(lowered, adder_input(lowered, layout, a, b), MeasurementStrategy::all_branches());
        branches += res.branches.size();
        const AdderSum want = cla_reference(a, b, n);
        bool ok = std::abs(res.total_probability - 1.0) <= 1e-9;
        for (const auto& br : res.branches) ok = ok && branch_sum(br, n) == want;
        if (!ok) {
          r.pass = false;
          r.detail = fmt::format("{} n={} a={} b={}: wrong branch or probability {}", display_name(d), n, a, b,
                                 res.total_probability);
          return r;
        }
      }
    }
  }
  r.detail = fmt::format("{} branches, all correct", branches);
  return r;
}

CriterionResult c7_savings(const ValidationOptions&) {
  CriterionResult r{7, "savings reproduction", true, ""};
  int matched = 0;
  for (const auto& q : quoted_savings()) {
    const SavingsFigure f = savings(q.design, q.baseline);
    if (!f.percent || !within_hundredth(*f.percent, q.value)) {
      r.pass = false;
      r.detail = fmt::format("{} vs {}: {} quoted {}", display_name(q.design), q.baseline, f.render(), q.value);
      return r;
    }
    ++matched;
  }
  std::string unreproduced;
  for (const auto& q : quoted_averages()) {
    const Rational avg = savings_average(q.design);
    if (q.design == DesignId::InFtQcla2) {
      unreproduced = fmt::format("{} average unreproduced: computed {} vs quoted {}", display_name(q.design),
                                 format_percent(avg), q.value);
      continue;
    }
    if (!within_hundredth(avg, q.value)) {
      r.pass = false;
      r.detail = fmt::format("{} average {} quoted {}", display_name(q.design), format_percent(avg), q.value);
      return r;
    }
  }
  r.detail = fmt::format("{} figures and 3 averages match; {}", matched, unreproduced);
  return r;
}

CriterionResult c8_depth(const ValidationOptions& o) {
  CriterionResult r{8, "logarithmic depth", true, ""};
  const auto ns = depth_widths(o.full);
  for (DesignId d : kAllDesigns) {
    std::vector<std::int64_t> toffoli_depth, t_depth;
    for (unsigned n : ns) {
      const Circuit c = build(d, n);
      toffoli_depth.push_back(schedule(c).total_depth);
      t_depth.push_back(schedule(lower(c)).t_depth);
    }
    std::string why_a, why_b;
    const bool a = log_bounded(ns, toffoli_depth, why_a);
    const bool b = log_bounded(ns, t_depth, why_b);
    r.detail += fmt::format("{}{}: depth {} / T-depth {}", r.detail.empty() ? "" : "; ", short_name(d),
                            a ? "ok" : why_a, b ? "ok" : why_b);
    r.pass = r.pass && a && b;
  }
  return r;
}

CriterionResult c9_roundtrip(const ValidationOptions& o) {
  CriterionResult r{9, "export round trip", true, ""};
  for (DesignId d : kAllDesigns) {
    for (unsigned n : {1u, 2u, 4u}) {
      const Circuit c = build(d, n);
      const Circuit low = lower(c);
      const std::string q1 = to_qasm3(low);
      const std::string q2 = to_qasm3(lower(build(d, n)));
      const std::string j1 = to_json(c);
      const std::string j2 = to_json(build(d, n));
      const std::string jl = to_json(low);
      const Circuit from_qasm = parse_qasm3(q1);
      const Circuit from_json = parse_json(j1);
      const Circuit from_jl = parse_json(jl);
      const bool ok = q1 == q2 && j1 == j2 && from_qasm.same_structure(low) && from_json.same_structure(c) &&
                      from_json.labels() == c.labels() && from_jl.same_structure(low) &&
                      to_qasm3(from_qasm) == q1 && to_json(from_json) == j1;
      if (!ok) {
        r.pass = false;
        r.detail = fmt::format("{} n={}: export not stable or round trip differs", display_name(d), n);
        return r;
      }
    }
  }
  if (o.golden_qasm) {
    if (to_qasm3(lower(build(DesignId::OutFtQcla1, 2))) != *o.golden_qasm) {
      r.pass = false;
      r.detail = "out1 n=2 QASM differs from golden file";
      return r;
    }
    r.detail = "12 circuits stable and round-trip; golden QASM matches";
  } else {
    r.detail = "12 circuits stable and round-trip (no golden file)";
  }
  return r;
}

}  // namespace

CriterionResult check_criterion(int id, const ValidationOptions& options) {
  switch (id) {
    case 1: return c1_tcount(options);
    case 2: return c2_in1_gap(options);
    case 3: return c3_qubits(options);
    case 4: return c4_functional(options);
    case 5: return c5_gadgets(options);
    case 6: return c6_statevector(options);
    case 7: return c7_savings(options);
    case 8: return c8_depth(options);
    case 9: return c9_roundtrip(options);
    default: throw std::invalid_argument(fmt::format("no criterion {}", id));
  }
}

std::vector<Discrepancy> discrepancy_ledger() {
  std::vector<Discrepancy> ledger;

  {
    const auto table = formula_tcount(DesignId::InFtQcla1, 8, FormulaSource::Table);
    const auto steps = formula_tcount(DesignId::InFtQcla1, 8, FormulaSource::PerStep);
    const auto measured = count(lower(build(DesignId::InFtQcla1, 8))).t_count;
    ledger.push_back({"InFtQcla1-TableIV",
                      "In-FT-QCLA1 closed form disagrees with its per-step T-count sum",
                      fmt::format("20n-8w(n)-8w(n-1)-4floor(log n)-4floor(log(n-1))-8 = {} at n=8", table),
                      fmt::format("28n-8w(n)-8floor(log n)-8w(n-1)-8floor(log(n-1))-20 = {} at n=8 (measured {})",
                                  steps, measured),
                      measured == steps && steps != table});
  }
  {
    const std::int64_t n = 8;
    const std::int64_t sized = 2 * n + (n + 1) + (3 * n - 2 * hamming_weight(n) - 2 * floor_log2(n));
    const auto table = formula_qubits(DesignId::OutFtQcla1, 8);
    const auto measured = count(build(DesignId::OutFtQcla1, 8)).qubit_count;
    ledger.push_back({"OutQubitOffByOne",
                      "out-of-place register sizing exceeds the qubit closed form by one",
                      fmt::format("6n-2w(n)-2floor(log n) = {} at n=8", table),
                      fmt::format("2n+(n+1)+(3n-2w(n)-2floor(log n)) = {} at n=8; on-demand ancillae give {}", sized,
                                  measured),
                      sized - table == 1});
  }
  {
    bool printed_fails = false;
    std::string how;
    try {
      const Circuit c = build(DesignId::InFtQcla1, 4, BuildOptions{true});
      const AdderLayout l = adder_layout(c);
      const ReversibleSimulator sim(c);
      for (std::uint64_t a = 0; a < 16 && !printed_fails; ++a) {
        for (std::uint64_t b = 0; b < 16 && !printed_fails; ++b) {
          try {
            const BasisState out = sim.run(adder_input(c, l, a, b));
            const AdderReadout rd = read_adder(l, out, a, b);
            if (rd.sum != cla_reference(a, b, 4) || !rd.garbage_free) {
              printed_fails = true;
              how = fmt::format("wrong result at a={} b={}", a, b);
            }
          } catch (const SimulationError& e) {
            printed_fails = true;
            how = e.what();
          }
        }
      }
    } catch (const std::exception& e) {
      printed_fails = true;
      how = e.what();
    }
    ledger.push_back({"Step13Bound",
                      "printed loop headers of the in-place reverse rounds mix widths n and n-1",
                      "m <= floor((n-1)/2^t)-1 in the last reverse round, n-bit headers elsewhere",
                      fmt::format("all reverse rounds run at width n-1; printed headers at n=4: {}",
                                  printed_fails ? how : "no failure observed"),
                      printed_fails});
  }
  {
    const Rational avg = savings_average(DesignId::InFtQcla2);
    ledger.push_back({"Abstract35_87", "In-FT-QCLA2 average T-count saving", "35.87",
                      fmt::format("{} (mean over the seven in-place baselines)", format_percent(avg)),
                      format_percent(avg) != "35.87"});
  }
  {
    auto t_of = [](const std::vector<Gate>& gates) {
      return std::count_if(gates.begin(), gates.end(),
                           [](const Gate& g) { return g.kind == GateKind::T || g.kind == GateKind::Tdg; });
    };
    const auto body = t_of(temporary_and_body({0, 0}, {0, 1}, {0, 2}));
    const auto full = t_of(lower_temporary_and({0, 0}, {0, 1}, {0, 2}));
    ledger.push_back({"Fig2aTCount", "temporary AND drawn with three T gates but costed at four", "4 T",
                      fmt::format("body {} T on a |A> ancilla, {} T including the |A> preparation", body, full),
                      body == 3 && full == 4});
  }
  return ledger;
}

bool ValidationReport::ok() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass; });
}

ValidationReport validate(const ValidationOptions& options) {
  ValidationReport rep;
  rep.full = options.full;
  const unsigned top = options.full ? 64 : 16;
  for (DesignId d : kAllDesigns) {
    for (unsigned n = min_formula_width(d); n <= top; ++n) rep.rows.push_back(conformance_row(d, n));
  }
  rep.ledger = discrepancy_ledger();
  for (DesignId d : kAllDesigns) {
    for (const auto& b : savings_baselines(d)) rep.savings.push_back(savings(d, b));
    rep.savings.push_back(savings(d, "Cheng"));
  }
  for (int id = 1; id <= 9; ++id) rep.criteria.push_back(check_criterion(id, options));
  return rep;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QCLA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return 42;
}

std::map<DesignId, std::int64_t> read_qubit_deltas(const std::string& path) {
  std::map<DesignId, std::int64_t> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream words(line);
    std::string design;
    std::int64_t delta = 0;
    if (words >> design >> delta) out[parse_design(design)] = delta;
  }
  return out;
}

std::string render_text(const ValidationReport& rep) {
  std::string out = fmt::format("validation ({} sweep)\n\n", rep.full ? "full" : "reduced");
  out += fmt::format("{:<14}{:>5}{:>10}{:>10}{:>10}{:>10}{:>10}\n", "design", "n", "T", "per-step", "table",
                     "qubits", "table");
  for (const auto& r : rep.rows) {
    out += fmt::format("{:<14}{:>5}{:>10}{:>10}{:>10}{:>10}{:>10}\n", display_name(r.design), r.n, r.measured_t,
                       r.per_step_t, r.table_t, r.measured_qubits, r.table_qubits);
  }
  out += "\ndiscrepancy ledger\n";
  for (const auto& d : rep.ledger) {
    out += fmt::format("  {} [{}]: {}\n    quoted:   {}\n    computed: {}\n", d.id,
                       d.reproduced ? "reproduced" : "NOT reproduced", d.summary, d.quoted, d.computed);
  }
  out += "\nsavings\n";
  for (const auto& s : rep.savings) out += fmt::format("  {:<14} vs {:<16} {}\n", s.design, s.baseline, s.render());
  out += "\ncriteria\n";
  for (const auto& c : rep.criteria) {
    out += fmt::format("  [{}] {} {}: {}\n", c.pass ? "PASS" : "FAIL", c.id, c.title, c.detail);
  }
  return out;
}

std::string render_json(const ValidationReport& rep) {
  nlohmann::ordered_json doc;
  doc["full"] = rep.full;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"design", display_name(r.design)},
                    {"n", r.n},
                    {"t_count", r.measured_t},
                    {"t_per_step", r.per_step_t},
                    {"t_table", r.table_t},
                    {"qubits", r.measured_qubits},
                    {"qubits_table", r.table_qubits}});
  }
  auto& ledger = doc["ledger"] = nlohmann::ordered_json::array();
  for (const auto& d : rep.ledger) {
    ledger.push_back({{"id", d.id},
                      {"summary", d.summary},
                      {"quoted", d.quoted},
                      {"computed", d.computed},
                      {"reproduced", d.reproduced}});
  }
  auto& sv = doc["savings"] = nlohmann::ordered_json::array();
  for (const auto& s : rep.savings) sv.push_back({{"design", s.design}, {"baseline", s.baseline}, {"percent", s.render()}});
  auto& crit = doc["criteria"] = nlohmann::ordered_json::array();
  for (const auto& c : rep.criteria) {
    crit.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
  }
  doc["ok"] = rep.ok();
  return doc.dump(2) + "\n";
}

}  // namespace qcla
