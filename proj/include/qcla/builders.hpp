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

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qcla/circuit.hpp"

namespace qcla {

/// The four carry-lookahead adder constructions.
enum class DesignId : std::uint8_t { OutFtQcla1, OutFtQcla2, InFtQcla1, InFtQcla2 };

inline constexpr std::array<DesignId, 4> kAllDesigns = {DesignId::OutFtQcla1, DesignId::OutFtQcla2,
                                                        DesignId::InFtQcla1, DesignId::InFtQcla2};

/// "out1", "out2", "in1", "in2".
std::string_view short_name(DesignId design);
/// "Out-FT-QCLA1" and friends.
std::string_view display_name(DesignId design);
/// Accepts either the short or the display name.
DesignId parse_design(std::string_view text);

bool is_in_place(DesignId design);
/// QCLA1 variants realize carry-network Toffolis as AND/uncompute pairs.
bool uses_and_pairs(DesignId design);
/// Smallest width with a defined closed-form cost (in-place forms use n-1).
unsigned min_formula_width(DesignId design);

enum class RoundKind : std::uint8_t { P, G, C, PErase, ReversePErase, ReverseC, ReverseG, ReverseP };

std::string_view round_name(RoundKind kind);
bool is_reverse(RoundKind kind);

/// One iteration of a round loop at level t and position m. For C-rounds
/// (and their reverse) j is 0, l = 2^t m and k = l + 2^{t-1}; otherwise
/// j = 2^t m, k = j + 2^t, l = j + 2^{t-1}.
struct RoundTriple {
  unsigned t = 0;
  unsigned m = 0;
  unsigned j = 0;
  unsigned k = 0;
  unsigned l = 0;

  auto operator<=>(const RoundTriple&) const = default;
};

/// Loop enumeration of a round for an n-bit adder, in emission order.
///
/// Forward kinds run over the n-bit carry network. Reverse kinds run over
/// the (n-1)-bit network that the in-place designs use to erase the carries
/// of the low n-1 bits; they need n >= 2 and yield nothing otherwise.
std::vector<RoundTriple> round_indices(RoundKind kind, unsigned n);

/// Same enumeration, reverse kinds evaluated with the loop headers exactly
/// as printed (n-bit for the first three reverse rounds).
std::vector<RoundTriple> round_indices_printed(RoundKind kind, unsigned n);

struct BuildOptions {
  /// Use the printed loop headers of the in-place reverse rounds. Such
  /// circuits are not valid adders; kept to document the discrepancy.
  bool printed_reverse_bounds = false;
};

/// Builds the Toffoli-level circuit for `design` at width `n` (n >= 1).
///
/// Register layout:
///   out-of-place: A[n], B[n], X[n+1] (X[0] = |0>, rest MagicA), Z pool.
///   in-place:     A[n], B[n], Z[n] (MagicA), X pool.
/// Final labels name the outputs: s_0..s_n and the restored a_i (and b_i
/// for out-of-place).
Circuit build(DesignId design, unsigned n, const BuildOptions& options = {});

/// (n+1)-bit sum split into its low n bits and the carry out.
struct AdderSum {
  std::uint64_t low = 0;
  bool carry = false;

  bool operator==(const AdderSum&) const = default;
};

/// Classical carry-lookahead reference: propagate/generate bits, then the
/// carry recurrence c_i = p_{i-1} c_{i-1} | g_{i-1}. Requires 1 <= n <= 64
/// and a, b < 2^n; throws std::invalid_argument otherwise.
AdderSum cla_reference(std::uint64_t a, std::uint64_t b, unsigned n);

}  // namespace qcla
