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

// qcla: generate, cost, simulate and validate carry-lookahead adders.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "qcla/builders.hpp"
#include "qcla/io.hpp"
#include "qcla/lowering.hpp"
#include "qcla/resources.hpp"
#include "qcla/reversible_sim.hpp"
#include "qcla/statevector.hpp"
#include "qcla/validation.hpp"

namespace {

using namespace qcla;

constexpr int kUsage = 2;
constexpr int kFailure = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DesignId design_arg(const std::string& text) {
  try {
    return parse_design(text);
  } catch (const std::exception&) {
    throw UsageError(fmt::format("unknown design '{}'", text));
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  out << text;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string design;
  unsigned n = 0;
  std::string level = "cliffordt";
  std::string format;
  std::string output;
};

int run_gen(const GenArgs& a) {
  const DesignId d = design_arg(a.design);
  Circuit c = build(d, a.n);
  if (a.level == "cliffordt") c = lower(c);
  std::string format = a.format.empty() ? (a.level == "cliffordt" ? "qasm3" : "json") : a.format;
  if (format == "qasm3" && c.level() != Level::CliffordT) {
    throw UsageError("qasm3 export needs --level cliffordt");
  }
  emit(format == "qasm3" ? to_qasm3(c) : to_json(c), a.output);
  return 0;
}

// ---------------------------------------------------------------------------

struct CostArgs {
  std::string design;
  unsigned from = 1;
  unsigned to = 1;
  bool check = false;
  std::string format = "table";
};

int run_cost(const CostArgs& a) {
  const DesignId d = design_arg(a.design);
  if (a.from == 0 || a.from > a.to) throw UsageError("need 1 <= --n-from <= --n-to");

  struct Row {
    unsigned n;
    ResourceReport r;
    std::int64_t toffoli_depth;
    std::optional<std::int64_t> per_step, table, table_qubits;
  };
  std::vector<Row> rows;
  bool mismatch = false;
  for (unsigned n = a.from; n <= a.to; ++n) {
    const Circuit c = build(d, n);
    Row row{n, count(lower(c)), schedule(c).total_depth, {}, {}, {}};
    if (n >= min_formula_width(d)) {
      row.per_step = formula_tcount(d, n, FormulaSource::PerStep);
      row.table = formula_tcount(d, n, FormulaSource::Table);
      row.table_qubits = formula_qubits(d, n);
      if (a.check && *row.per_step != row.r.t_count) mismatch = true;
    }
    rows.push_back(row);
  }

  auto opt = [](const std::optional<std::int64_t>& v) { return v ? fmt::format("{}", *v) : std::string("-"); };
  std::string out;
  if (a.format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json j;
      j["design"] = display_name(d);
      j["n"] = row.n;
      j["t_count"] = row.r.t_count;
      j["t_depth"] = row.r.t_depth;
      j["depth"] = row.r.total_depth;
      j["toffoli_depth"] = row.toffoli_depth;
      j["qubits"] = row.r.qubit_count;
      j["cnot"] = row.r.cnot_count;
      j["measurements"] = row.r.measurement_count;
      j["t_per_step"] = row.per_step ? nlohmann::ordered_json(*row.per_step) : nlohmann::ordered_json();
      j["t_table"] = row.table ? nlohmann::ordered_json(*row.table) : nlohmann::ordered_json();
      j["qubits_table"] = row.table_qubits ? nlohmann::ordered_json(*row.table_qubits) : nlohmann::ordered_json();
      doc.push_back(std::move(j));
    }
    out = doc.dump(2) + "\n";
  } else if (a.format == "csv") {
    out = "design,n,t_count,t_depth,depth,toffoli_depth,qubits,cnot,measurements,t_per_step,t_table,qubits_table\n";
    for (const auto& row : rows) {
      out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", short_name(d), row.n, row.r.t_count,
                         row.r.t_depth, row.r.total_depth, row.toffoli_depth, row.r.qubit_count, row.r.cnot_count,
                         row.r.measurement_count, opt(row.per_step), opt(row.table), opt(row.table_qubits));
    }
  } else {
    out = fmt::format("{:<14}{:>5}{:>8}{:>9}{:>8}{:>9}{:>8}{:>10}{:>8}{:>9}\n", "design", "n", "T", "T-depth",
                      "depth", "qubits", "table", "per-step", "table", "delta-q");
    for (const auto& row : rows) {
      const std::string dq = row.table_qubits ? fmt::format("{:+}", row.r.qubit_count - *row.table_qubits) : "-";
      out += fmt::format("{:<14}{:>5}{:>8}{:>9}{:>8}{:>9}{:>8}{:>10}{:>8}{:>9}\n", display_name(d), row.n,
                         row.r.t_count, row.r.t_depth, row.r.total_depth, row.r.qubit_count, opt(row.table_qubits),
                         opt(row.per_step), opt(row.table), dq);
    }
  }
  std::cout << out;
  if (mismatch) {
    std::cerr << "measured T-count differs from the per-step formula\n";
    return kFailure;
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct SimArgs {
  std::string design;
  unsigned n = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::string backend = "reversible";
  std::string branches = "all";
};

int run_sim(const SimArgs& s) {
  const DesignId d = design_arg(s.design);
  if (s.n == 0 || s.n > 64) throw UsageError("--n must be in 1..64");
  if (s.n < 64 && (s.a >> s.n || s.b >> s.n)) throw UsageError("operands do not fit in n bits");
  const Circuit c = build(d, s.n);
  const AdderLayout layout = adder_layout(c);
  const AdderSum want = cla_reference(s.a, s.b, s.n);
  auto value = [&](const AdderSum& v) {
    if (s.n == 64) return fmt::format("{}{}", v.carry ? "2^64 + " : "", v.low);
    return fmt::format("{}", v.low + (std::uint64_t{v.carry} << s.n));
  };

  if (s.backend == "reversible") {
    const BasisState out = run_basis(c, adder_input(c, layout, s.a, s.b));
    const AdderReadout r = read_adder(layout, out, s.a, s.b);
    const bool ok = r.sum == want && r.operands_restored && r.garbage_free;
    fmt::print("{}\n", value(r.sum));
    fmt::print("verdict: {} (reference {}, operands {}, ancillae {})\n", ok ? "ok" : "MISMATCH", value(want),
               r.operands_restored ? "restored" : "NOT restored", r.garbage_free ? "clean" : "dirty");
    return ok ? 0 : kFailure;
  }
  if (s.backend != "statevector") throw UsageError("--backend must be reversible or statevector");

  MeasurementStrategy strategy = MeasurementStrategy::all_branches();
  if (s.branches.starts_with("seed:")) {
    try {
      strategy = MeasurementStrategy::seeded(std::stoull(s.branches.substr(5)));
    } catch (const std::exception&) {
      throw UsageError("--branches seed:S needs a numeric seed");
    }
  } else if (s.branches == "seed") {
    strategy = MeasurementStrategy::seeded(default_seed());
  } else if (s.branches != "all") {
    throw UsageError("--branches must be all or seed:S");
  }
  const Circuit low = lower(c);
  const SvResult res = simulate(low, adder_input(low, layout, s.a, s.b), strategy);
  bool ok = std::abs(res.total_probability - 1.0) <= 1e-9 || strategy.kind != MeasurementStrategy::Kind::AllBranches;
  std::optional<AdderSum> first;
  for (const auto& br : res.branches) {
    const AdderSum got = branch_sum(br, s.n);
    if (!first) first = got;
    ok = ok && got == want;
  }
  fmt::print("{}\n", value(*first));
  fmt::print("verdict: {} (reference {}, {} branch(es), total probability {:.12f})\n", ok ? "ok" : "MISMATCH",
             value(want), res.branches.size(), res.total_probability);
  return ok ? 0 : kFailure;
}

// ---------------------------------------------------------------------------

int run_compare(const std::string& table, unsigned n) {
  if (table != "out" && table != "in") throw UsageError("--table must be out or in");
  const bool in_place = table == "in";
  if (n == 0 || (in_place && n < 2)) throw UsageError("--n too small for this table");

  fmt::print("{:<16}{:>14}{:>10}  {}\n", "work", "T-count", "qubits", "T-count form");
  for (const auto& m : cost_catalog()) {
    if (m.in_place != in_place) continue;
    const CatalogCost cc = catalog_cost(m.label, n);
    fmt::print("{:<16}{:>14}{:>10}  {}{}\n", m.label, format_rational(cc.t), format_rational(cc.qubits),
               m.t_printed, m.approximate ? "  (approximate)" : "");
  }

  const std::vector<DesignId> designs = in_place ? std::vector{DesignId::InFtQcla1, DesignId::InFtQcla2}
                                                 : std::vector{DesignId::OutFtQcla1, DesignId::OutFtQcla2};
  fmt::print("\nT-count savings (leading coefficients)\n{:<16}", "baseline");
  for (DesignId d : designs) fmt::print("{:>22}", display_name(d));
  fmt::print("\n");
  auto baselines = savings_baselines(designs.front());
  baselines.push_back("Cheng");
  if (!in_place) baselines.pop_back();
  for (const auto& b : baselines) {
    fmt::print("{:<16}", b);
    for (DesignId d : designs) fmt::print("{:>22}", savings(d, b).render());
    fmt::print("\n");
  }
  fmt::print("{:<16}", "average");
  for (DesignId d : designs) fmt::print("{:>22}", format_percent(savings_average(d)));
  fmt::print("\n{:<16}", "quoted average");
  for (DesignId d : designs) {
    for (const auto& q : quoted_averages()) {
      if (q.design == d) fmt::print("{:>22}", q.value);
    }
  }
  fmt::print("\n");
  return 0;
}

// ---------------------------------------------------------------------------

int run_verify(bool full, const std::string& golden_dir, const std::string& report_path,
               const std::string& format) {
  ValidationOptions o;
  o.full = full;
  o.seed = default_seed();
  if (!golden_dir.empty()) {
    o.golden_qubit_delta = read_qubit_deltas(golden_dir + "/qubit_deltas.txt");
    std::ifstream q(golden_dir + "/out1_n2_cliffordt.qasm", std::ios::binary);
    if (q) o.golden_qasm = std::string(std::istreambuf_iterator<char>(q), {});
  }
  const ValidationReport rep = validate(o);
  const std::string text = format == "json" ? render_json(rep) : render_text(rep);
  emit(text, report_path);
  if (!report_path.empty()) {
    for (const auto& c : rep.criteria) fmt::print("[{}] {} {}\n", c.pass ? "PASS" : "FAIL", c.id, c.title);
  }
  return rep.ok() ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fault-tolerant quantum carry-lookahead adder toolkit"};
  app.require_subcommand(1);
  const std::vector<std::string> design_names = {"out1", "out2", "in1", "in2"};

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit an adder circuit");
  gen_cmd->add_option("--design", gen.design, "out1|out2|in1|in2")->required()->check(CLI::IsMember(design_names));
  gen_cmd->add_option("--n", gen.n, "Operand width")->required()->check(CLI::Range(1u, 4096u));
  gen_cmd->add_option("--level", gen.level, "toffoli|cliffordt")->check(CLI::IsMember({"toffoli", "cliffordt"}));
  gen_cmd->add_option("--format", gen.format, "qasm3|json")->check(CLI::IsMember({"qasm3", "json"}));
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  CostArgs cost;
  auto* cost_cmd = app.add_subcommand("cost", "Resource counts against the closed forms");
  cost_cmd->add_option("--design", cost.design)->required()->check(CLI::IsMember(design_names));
  cost_cmd->add_option("--n-from", cost.from)->required();
  cost_cmd->add_option("--n-to", cost.to)->required()->check(CLI::Range(1u, 4096u));
  cost_cmd->add_flag("--check-formulas", cost.check, "Exit 1 if measured T differs from the per-step formula");
  cost_cmd->add_option("--format", cost.format)->check(CLI::IsMember({"table", "csv", "json"}));

  SimArgs sim;
  auto* sim_cmd = app.add_subcommand("sim", "Simulate one addition");
  sim_cmd->add_option("--design", sim.design)->required()->check(CLI::IsMember(design_names));
  sim_cmd->add_option("--n", sim.n)->required();
  sim_cmd->add_option("--a", sim.a)->required();
  sim_cmd->add_option("--b", sim.b)->required();
  sim_cmd->add_option("--backend", sim.backend)->check(CLI::IsMember({"reversible", "statevector"}));
  sim_cmd->add_option("--branches", sim.branches, "all | seed:S (statevector only)");

  std::string table;
  unsigned compare_n = 0;
  auto* cmp_cmd = app.add_subcommand("compare", "Catalog comparison and savings");
  cmp_cmd->add_option("--table", table)->required()->check(CLI::IsMember({"out", "in"}));
  cmp_cmd->add_option("--n", compare_n)->required();

  bool full = false;
  std::string golden = "golden";
  std::string report;
  std::string report_format = "text";
  auto* ver_cmd = app.add_subcommand("verify", "Run the acceptance checks and print a validation report");
  ver_cmd->add_flag("--full", full, "Full acceptance parameters");
  ver_cmd->add_option("--golden", golden, "Golden directory (empty to skip)");
  ver_cmd->add_option("--report", report, "Write the report to a file");
  ver_cmd->add_option("--format", report_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*cost_cmd) return run_cost(cost);
    if (*sim_cmd) return run_sim(sim);
    if (*cmp_cmd) return run_compare(table, compare_n);
    if (*ver_cmd) return run_verify(full, golden, report, report_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
