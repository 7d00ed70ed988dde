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

#include "qcla/builders.hpp"

#include <fmt/format.h>

#include <bit>
#include <stdexcept>

namespace qcla {

std::string_view short_name(DesignId design) {
  switch (design) {
    case DesignId::OutFtQcla1: return "out1";
    case DesignId::OutFtQcla2: return "out2";
    case DesignId::InFtQcla1: return "in1";
    case DesignId::InFtQcla2: return "in2";
  }
  return "?";
}

std::string_view display_name(DesignId design) {
  switch (design) {
    case DesignId::OutFtQcla1: return "Out-FT-QCLA1";
    case DesignId::OutFtQcla2: return "Out-FT-QCLA2";
    case DesignId::InFtQcla1: return "In-FT-QCLA1";
    case DesignId::InFtQcla2: return "In-FT-QCLA2";
  }
  return "?";
}

DesignId parse_design(std::string_view text) {
  for (DesignId d : kAllDesigns) {
    if (text == short_name(d) || text == display_name(d)) return d;
  }
  throw std::invalid_argument(fmt::format("unknown design '{}'", text));
}

bool is_in_place(DesignId design) {
  return design == DesignId::InFtQcla1 || design == DesignId::InFtQcla2;
}

bool uses_and_pairs(DesignId design) {
  return design == DesignId::OutFtQcla1 || design == DesignId::InFtQcla1;
}

unsigned min_formula_width(DesignId design) { return is_in_place(design) ? 2 : 1; }

std::string_view round_name(RoundKind kind) {
  switch (kind) {
    case RoundKind::P: return "P";
    case RoundKind::G: return "G";
    case RoundKind::C: return "C";
    case RoundKind::PErase: return "P-erase";
    case RoundKind::ReversePErase: return "reverse-P-erase";
    case RoundKind::ReverseC: return "reverse-C";
    case RoundKind::ReverseG: return "reverse-G";
    case RoundKind::ReverseP: return "reverse-P";
  }
  return "?";
}

bool is_reverse(RoundKind kind) {
  return kind == RoundKind::ReversePErase || kind == RoundKind::ReverseC ||
         kind == RoundKind::ReverseG || kind == RoundKind::ReverseP;
}

namespace {

unsigned log2_floor(unsigned n) { return static_cast<unsigned>(std::bit_width(n)) - 1; }

/// Largest t with 2^t <= 2n/3, or -1 when 2n/3 < 1.
int c_round_top(unsigned n) {
  int t = -1;
  while (3ull << (t + 1) <= 2ull * n) ++t;
  return t;
}

RoundTriple span_triple(unsigned t, unsigned m) {
  unsigned j = (1u << t) * m;
  return {t, m, j, j + (1u << t), j + (1u << (t - 1))};
}

RoundTriple carry_triple(unsigned t, unsigned m) {
  unsigned l = (1u << t) * m;
  return {t, m, 0, l + (1u << (t - 1)), l};
}

// P: t = 1 .. floor(log n) - 1, m = 1 .. floor(n / 2^t) - 1.
void p_rounds(unsigned n, bool descending, std::vector<RoundTriple>& out) {
  int top = static_cast<int>(log2_floor(n)) - 1;
  auto level = [&](unsigned t) {
    for (unsigned m = 1; m + 1 <= (n >> t); ++m) out.push_back(span_triple(t, m));
  };
  if (descending) {
    for (int t = top; t >= 1; --t) level(static_cast<unsigned>(t));
  } else {
    for (int t = 1; t <= top; ++t) level(static_cast<unsigned>(t));
  }
}

// G: t = 1 .. floor(log n), m = 0 .. floor(n / 2^t) - 1.
void g_rounds(unsigned n, bool descending, std::vector<RoundTriple>& out) {
  int top = static_cast<int>(log2_floor(n));
  auto level = [&](unsigned t) {
    for (unsigned m = 0; m < (n >> t); ++m) out.push_back(span_triple(t, m));
  };
  if (descending) {
    for (int t = top; t >= 1; --t) level(static_cast<unsigned>(t));
  } else {
    for (int t = 1; t <= top; ++t) level(static_cast<unsigned>(t));
  }
}

// C: t = floor(log 2n/3) .. 1, m = 1 .. floor((n - 2^{t-1}) / 2^t).
void c_rounds(unsigned n, bool descending, std::vector<RoundTriple>& out) {
  int top = c_round_top(n);
  auto level = [&](unsigned t) {
    unsigned half = 1u << (t - 1);
    if (n < half) return;
    for (unsigned m = 1; m <= (n - half) >> t; ++m) out.push_back(carry_triple(t, m));
  };
  if (descending) {
    for (int t = top; t >= 1; --t) level(static_cast<unsigned>(t));
  } else {
    for (int t = 1; t <= top; ++t) level(static_cast<unsigned>(t));
  }
}

}  // namespace

std::vector<RoundTriple> round_indices(RoundKind kind, unsigned n) {
  std::vector<RoundTriple> out;
  if (n == 0) return out;
  if (is_reverse(kind) && n < 2) return out;
  switch (kind) {
    case RoundKind::P: p_rounds(n, false, out); break;
    case RoundKind::G: g_rounds(n, false, out); break;
    case RoundKind::C: c_rounds(n, true, out); break;
    case RoundKind::PErase: p_rounds(n, true, out); break;
    case RoundKind::ReversePErase: p_rounds(n - 1, false, out); break;
    case RoundKind::ReverseC: c_rounds(n - 1, false, out); break;
    case RoundKind::ReverseG: g_rounds(n - 1, true, out); break;
    case RoundKind::ReverseP: p_rounds(n - 1, true, out); break;
  }
  return out;
}

std::vector<RoundTriple> round_indices_printed(RoundKind kind, unsigned n) {
  std::vector<RoundTriple> out;
  if (n == 0) return out;
  switch (kind) {
    case RoundKind::ReversePErase: p_rounds(n, false, out); return out;
    case RoundKind::ReverseC: c_rounds(n, false, out); return out;
    case RoundKind::ReverseG: g_rounds(n, true, out); return out;
    case RoundKind::ReverseP: {
      // t = floor(log n) - 1 .. 1, m = 1 .. floor((n-1) / 2^t) - 1.
      for (int t = static_cast<int>(log2_floor(n)) - 1; t >= 1; --t) {
        for (unsigned m = 1; m + 1 <= ((n - 1) >> t); ++m) {
          out.push_back(span_triple(static_cast<unsigned>(t), m));
        }
      }
      return out;
    }
    default: return round_indices(kind, n);
  }
}

namespace {

using L = WireLabel;

class AdderBuilder {
 public:
  AdderBuilder(DesignId design, unsigned n, const BuildOptions& options)
      : design_(design), n_(n), options_(options) {}

  Circuit run() {
    if (is_in_place(design_)) {
      build_in_place();
    } else {
      build_out_of_place();
    }
    return std::move(c_);
  }

 private:
  QubitRef at(WireLabel label) const { return c_.labels().at(label); }

  std::vector<RoundTriple> rounds(RoundKind kind) const {
    return options_.printed_reverse_bounds ? round_indices_printed(kind, n_) : round_indices(kind, n_);
  }

  // A Toffoli onto `target`: either a plain Toffoli or, for QCLA1, a
  // temporary AND into a fresh ancilla, a CNOT onto the target, and an
  // immediate uncompute of the ancilla.
  void toffoli_step(QubitRef c1, QubitRef c2, QubitRef target) {
    if (!uses_and_pairs(design_)) {
      c_.append(Gate::toffoli(c1, c2, target));
      return;
    }
    QubitRef tmp = c_.allocate_ancilla(AncillaInit::MagicA, policy_);
    c_.append(Gate::temporary_and(c1, c2, tmp));
    c_.append(Gate::cnot(tmp, target));
    c_.append(Gate::uncompute(c1, c2, tmp));
    c_.labels().assign(tmp, L::spent());
    c_.free_ancilla(tmp);
  }

  void operand_registers(const char* ancilla_name, std::size_t ancilla_len, AncillaInit first,
                         const char* pool_name) {
    std::vector<AncillaInit> anc(ancilla_len, AncillaInit::MagicA);
    if (!anc.empty()) anc[0] = first;
    c_ = Circuit::create({{"A", n_, {}, false},
                          {"B", n_, {}, false},
                          {ancilla_name, ancilla_len, anc, true},
                          {pool_name, 0, {}, true}});
    c_.set_ancilla_pool(pool_name);
    for (unsigned i = 0; i < n_; ++i) {
      c_.labels().assign(c_.qubit("A", i), L::a(i));
      c_.labels().assign(c_.qubit("B", i), L::b(i));
    }
    for (unsigned i = 0; i < ancilla_len; ++i) c_.labels().assign(c_.qubit(ancilla_name, i), L::free());
  }

  // Steps 1 through 6, shared by all four designs. `g_home(i)` is the
  // ancilla that receives g[i,i+1].
  template <typename GHome>
  void carry_network(GHome g_home) {
    // Step 1: g[i,i+1] = a_i & b_i.
    for (unsigned i = 0; i < n_; ++i) {
      QubitRef g = g_home(i);
      c_.append(Gate::temporary_and(c_.qubit("A", i), c_.qubit("B", i), g));
      c_.labels().assign(g, L::g(i, i + 1));
    }
    // Step 2: p[i,i+1] = a_i ^ b_i, in place on B.
    for (unsigned i = 1; i < n_; ++i) {
      c_.append(Gate::cnot(c_.qubit("A", i), c_.qubit("B", i)));
      c_.labels().rename(L::b(i), L::p(i, i + 1));
    }
    // Step 3: P-rounds.
    for (const auto& r : rounds(RoundKind::P)) {
      QubitRef q = c_.allocate_ancilla(AncillaInit::MagicA, AllocPolicy::Fresh);
      c_.append(Gate::temporary_and(at(L::p(r.j, r.l)), at(L::p(r.l, r.k)), q));
      c_.labels().assign(q, L::p(r.j, r.k));
    }
    // Step 4: G-rounds.
    for (const auto& r : rounds(RoundKind::G)) {
      toffoli_step(at(L::g(r.j, r.l)), at(L::p(r.l, r.k)), at(L::g(r.l, r.k)));
      c_.labels().rename(L::g(r.l, r.k), L::g(r.j, r.k));
    }
    // Step 5: C-rounds.
    for (const auto& r : rounds(RoundKind::C)) {
      toffoli_step(at(L::g(0, r.l)), at(L::p(r.l, r.k)), at(L::g(r.l, r.k)));
      c_.labels().rename(L::g(r.l, r.k), L::g(0, r.k));
    }
    // Step 6: P-erase-rounds.
    for (const auto& r : rounds(RoundKind::PErase)) {
      QubitRef q = at(L::p(r.j, r.k));
      c_.append(Gate::uncompute(at(L::p(r.j, r.l)), at(L::p(r.l, r.k)), q));
      c_.labels().assign(q, L::spent());
      c_.free_ancilla(q);
    }
  }

  void build_out_of_place() {
    operand_registers("X", n_ + 1, AncillaInit::Zero, "Z");
    carry_network([&](unsigned i) { return c_.qubit("X", i + 1); });

    // Step 7: s_i = p[i,i+1] ^ g[0,i]; s_n is g[0,n].
    for (unsigned i = 1; i < n_; ++i) {
      c_.append(Gate::cnot(at(L::p(i, i + 1)), at(L::g(0, i))));
      c_.labels().rename(L::g(0, i), L::s(i));
    }
    c_.labels().rename(L::g(0, n_), L::s(n_));
    QubitRef x0 = c_.qubit("X", 0);
    c_.append(Gate::cnot(c_.qubit("B", 0), x0));
    // Step 8: restore B and finish s_0 = a_0 ^ b_0 on X[0].
    for (unsigned i = 1; i < n_; ++i) {
      c_.append(Gate::cnot(c_.qubit("A", i), at(L::p(i, i + 1))));
      c_.labels().rename(L::p(i, i + 1), L::b(i));
    }
    c_.append(Gate::cnot(c_.qubit("A", 0), x0));
    c_.labels().assign(x0, L::s(0));
  }

  void build_in_place() {
    operand_registers("Z", n_, AncillaInit::MagicA, "X");
    carry_network([&](unsigned i) { return c_.qubit("Z", i); });
    const unsigned n = n_;

    if (n == 1) {
      // Bit 0 is also the top bit: s_0 = p_0 and s_1 = g[0,1]; the
      // complement-and-erase half below is empty.
      c_.append(Gate::cnot(c_.qubit("A", 0), c_.qubit("B", 0)));
      c_.labels().rename(L::b(0), L::s(0));
      c_.labels().rename(L::g(0, 1), L::s(1));
      return;
    }

    // Step 7: B[i] = p_i ^ c_i = s_i.
    for (unsigned i = 1; i < n; ++i) {
      c_.append(Gate::cnot(at(L::g(0, i)), at(L::p(i, i + 1))));
      c_.labels().rename(L::p(i, i + 1), L::s(i));
    }
    c_.labels().rename(L::g(0, n), L::s(n));
    // Step 8: complement. B[0] becomes p[0,1] = ~b_0 of the erase network.
    c_.append(Gate::x(c_.qubit("B", 0)));
    c_.labels().rename(L::b(0), L::p(0, 1));
    for (unsigned i = 1; i + 2 <= n; ++i) c_.append(Gate::x(at(L::s(i))));
    // Step 9: p[i,i+1] = a_i ^ ~s_i.
    for (unsigned i = 1; i + 2 <= n; ++i) {
      c_.append(Gate::cnot(c_.qubit("A", i), at(L::s(i))));
      c_.labels().rename(L::s(i), L::p(i, i + 1));
    }

    // Steps 10-13 reuse measured ancillae of the first half.
    policy_ = AllocPolicy::Reuse;
    // Step 10: reverse of P-erase-rounds recomputes p[j,k].
    for (const auto& r : rounds(RoundKind::ReversePErase)) {
      QubitRef q = c_.allocate_ancilla(AncillaInit::MagicA, AllocPolicy::Reuse);
      c_.append(Gate::temporary_and(at(L::p(r.j, r.l)), at(L::p(r.l, r.k)), q));
      c_.labels().assign(q, L::p(r.j, r.k));
    }
    // Step 11: reverse of C-rounds, g[0,k] -> g[l,k].
    for (const auto& r : rounds(RoundKind::ReverseC)) {
      toffoli_step(at(L::g(0, r.l)), at(L::p(r.l, r.k)), at(L::g(0, r.k)));
      c_.labels().rename(L::g(0, r.k), L::g(r.l, r.k));
    }
    // Step 12: reverse of G-rounds, g[j,k] -> g[l,k].
    for (const auto& r : rounds(RoundKind::ReverseG)) {
      toffoli_step(at(L::g(r.j, r.l)), at(L::p(r.l, r.k)), at(L::g(r.j, r.k)));
      c_.labels().rename(L::g(r.j, r.k), L::g(r.l, r.k));
    }
    // Step 13: reverse of P-rounds erases p[j,k].
    for (const auto& r : rounds(RoundKind::ReverseP)) {
      QubitRef q = at(L::p(r.j, r.k));
      c_.append(Gate::uncompute(at(L::p(r.j, r.l)), at(L::p(r.l, r.k)), q));
      c_.labels().assign(q, L::spent());
      c_.free_ancilla(q);
    }
    // Step 14: back to ~s_i, bit 0 included.
    for (unsigned i = 0; i + 2 <= n; ++i) {
      c_.append(Gate::cnot(c_.qubit("A", i), at(L::p(i, i + 1))));
    }
    // Step 15: erase g[i,i+1] = a_i & ~s_i.
    for (unsigned i = 0; i + 2 <= n; ++i) {
      QubitRef g = at(L::g(i, i + 1));
      c_.append(Gate::uncompute(c_.qubit("A", i), at(L::p(i, i + 1)), g));
      c_.labels().assign(g, L::spent());
    }
    // Step 16: s_i = ~(~s_i).
    for (unsigned i = 0; i + 2 <= n; ++i) {
      c_.append(Gate::x(at(L::p(i, i + 1))));
      c_.labels().rename(L::p(i, i + 1), L::s(i));
    }
  }

  DesignId design_;
  unsigned n_;
  BuildOptions options_;
  AllocPolicy policy_ = AllocPolicy::Fresh;
  Circuit c_;
};

}  // namespace

Circuit build(DesignId design, unsigned n, const BuildOptions& options) {
  if (n == 0) throw std::invalid_argument("adder width must be at least 1");
  if (n > 4096) throw std::invalid_argument("adder width above 4096 is not supported");
  return AdderBuilder(design, n, options).run();
}

AdderSum cla_reference(std::uint64_t a, std::uint64_t b, unsigned n) {
  if (n == 0 || n > 64) throw std::invalid_argument("cla_reference needs 1 <= n <= 64");
  if (n < 64 && ((a >> n) != 0 || (b >> n) != 0)) {
    throw std::invalid_argument(fmt::format("operands must be below 2^{}", n));
  }
  auto bit = [](std::uint64_t v, unsigned i) { return static_cast<bool>((v >> i) & 1u); };

  std::vector<bool> p(n), g(n);
  for (unsigned i = 0; i < n; ++i) {
    p[i] = bit(a, i) != bit(b, i);
    g[i] = bit(a, i) && bit(b, i);
  }
  AdderSum sum;
  bool carry = g[0];  // no carry-in
  if (p[0]) sum.low |= 1;
  for (unsigned i = 1; i < n; ++i) {
    carry = (p[i - 1] && carry) || g[i - 1];
    if (carry != (bit(a, i) != bit(b, i))) sum.low |= std::uint64_t{1} << i;
  }
  sum.carry = (p[n - 1] && carry) || g[n - 1];
  return sum;
}

}  // namespace qcla
