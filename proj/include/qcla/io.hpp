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
#include <string>
#include <string_view>

#include "qcla/circuit.hpp"

namespace qcla {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class ExportFormat : std::uint8_t { Qasm3, JsonIr };

/// OpenQASM 3 text for a Clifford+T circuit. Throws CircuitError for
/// Toffoli-level input.
///
/// Ancilla metadata, the pool register, zero-length registers and final
/// wire labels travel in `//` comments so that parse_qasm3 can rebuild the
/// register table. MagicA qubits get an explicit `h; t;` prologue.
std::string to_qasm3(const Circuit& circuit);

/// Parses the subset emitted by to_qasm3. Throws ParseError.
Circuit parse_qasm3(std::string_view text);

inline constexpr std::string_view kJsonSchema = "qcla-ir/1";

/// Deterministic JSON IR (two-space indent, trailing newline).
std::string to_json(const Circuit& circuit);
/// Throws ParseError (line 0) on schema or structure errors.
Circuit parse_json(std::string_view text);

}  // namespace qcla
