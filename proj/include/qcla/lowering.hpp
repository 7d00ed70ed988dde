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
#include <stdexcept>
#include <vector>

#include "qcla/circuit.hpp"

namespace qcla {

class LoweringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ToffoliStyle : std::uint8_t { MaslovSevenT };
enum class AndStyle : std::uint8_t { GidneyFourT };
enum class UncomputeStyle : std::uint8_t { MeasureBased };

struct LoweringPolicy {
  ToffoliStyle toffoli = ToffoliStyle::MaslovSevenT;
  AndStyle and_gate = AndStyle::GidneyFourT;
  UncomputeStyle uncompute = UncomputeStyle::MeasureBased;
};

/// 7-T Toffoli: H on the target, a T/T-dagger ladder interleaved with
/// CNOTs, closing H.
std::vector<Gate> lower_toffoli(QubitRef c1, QubitRef c2, QubitRef target);

/// Prepares |A> = T H |0> on a |0> qubit (one T gate).
std::vector<Gate> magic_state_preparation(QubitRef ancilla);

/// The AND body acting on an ancilla already in |A> (three T-type gates).
std::vector<Gate> temporary_and_body(QubitRef c1, QubitRef c2, QubitRef ancilla);

/// Full 4-T temporary AND from a |0> ancilla: preparation then body.
std::vector<Gate> lower_temporary_and(QubitRef c1, QubitRef c2, QubitRef ancilla);

/// X-basis measurement of the target into `cbit` followed by a CZ on the
/// controls conditioned on the outcome. No T gates.
std::vector<Gate> lower_uncompute(QubitRef c1, QubitRef c2, QubitRef target, std::uint32_t cbit);

/// Gate-by-gate rewrite of a Toffoli-level circuit into Clifford+T.
///
/// Not, Cnot and Reset pass through. Every MagicA ancilla becomes a |0>
/// ancilla whose |A> preparation is emitted as part of the AND that
/// consumes it, so the qubit set is unchanged and the T-count is exactly
/// 7 per Toffoli plus 4 per TemporaryAnd. Throws LoweringError when an AND
/// target is not an unused MagicA ancilla.
Circuit lower(const Circuit& circuit, const LoweringPolicy& policy = {});

}  // namespace qcla
