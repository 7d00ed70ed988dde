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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcla/builders.hpp"
#include "qcla/resources.hpp"

namespace qcla {

/// Measured against closed-form costs for one (design, n).
struct ConformanceRow {
  DesignId design{};
  unsigned n = 0;
  std::int64_t measured_t = 0;
  std::int64_t per_step_t = 0;
  std::int64_t table_t = 0;
  std::int64_t measured_qubits = 0;
  std::int64_t table_qubits = 0;
};

/// Builds, lowers and counts. Throws std::domain_error below the design's
/// formula width.
ConformanceRow conformance_row(DesignId design, unsigned n);

/// A known inconsistency between two quoted or derived values.
struct Discrepancy {
  std::string id;
  std::string summary;
  std::string quoted;
  std::string computed;
  /// The artifact observes the inconsistency exactly as described.
  bool reproduced = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

/// A savings percentage or average quoted for comparison.
struct QuotedFigure {
  DesignId design{};
  std::string baseline;  // empty for averages
  std::string value;
};

const std::vector<QuotedFigure>& quoted_savings();
const std::vector<QuotedFigure>& quoted_averages();

struct ValidationOptions {
  /// Full acceptance parameters; otherwise a reduced sweep.
  bool full = false;
  /// Expected per-design signed qubit delta (measured - formula), if known.
  std::map<DesignId, std::int64_t> golden_qubit_delta;
  /// Golden QASM for lowered out1 at n = 2, if available.
  std::optional<std::string> golden_qasm;
  std::uint64_t seed = 42;
};

struct ValidationReport {
  bool full = false;
  std::vector<ConformanceRow> rows;
  std::vector<Discrepancy> ledger;
  std::vector<SavingsFigure> savings;
  std::vector<CriterionResult> criteria;

  bool ok() const;
};

/// Each criterion is self-contained and returns pass/fail with a one-line
/// detail. Ids 1..9.
CriterionResult check_criterion(int id, const ValidationOptions& options);

/// The five fixed ledger entries.
std::vector<Discrepancy> discrepancy_ledger();

ValidationReport validate(const ValidationOptions& options);

/// QCLA_SEED if set and numeric, else 42.
std::uint64_t default_seed();

/// Reads "<design> <delta>" lines. Missing file gives an empty map.
std::map<DesignId, std::int64_t> read_qubit_deltas(const std::string& path);

std::string render_text(const ValidationReport& report);
std::string render_json(const ValidationReport& report);

}  // namespace qcla
