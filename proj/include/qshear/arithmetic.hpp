// Copyright 2026 The qshear Authors
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

// Reversible arithmetic netlists: ripple-carry adder/subtractor, self-adder
// (doubling), controlled multiplier and nearest-value interpolation.
//
// Every builder comes in two forms. The emit_* functions append gates to an
// existing netlist over caller-supplied registers and allocate their own
// scratch wires under `prefix`; all scratch wires end at 0. The build_*
// functions return a standalone netlist with conventionally named registers
// and an "ancillae" register grouping every scratch wire.
//
// Standalone register names:
//   adder / subtractor   a[n], b[n+1], carry[n]
//   self-adder           x[n], out[n+1]
//   ctrl-multi           c[1], a[m] (multiplicand), x[n] (multiplier),
//                        product[m+n]
//   interpolation        a[m] (integer part), frac[4] (b3 = frac[3]), d[m+1]

#include <cstdint>
#include <span>
#include <string>

#include "qshear/reversible.hpp"

namespace qshear {

enum class CircuitKind : std::uint8_t {
  kAdder,
  kSubtractor,
  kSelfAdder,
  kCtrlMulti,
  kInterpolation,
};

std::string_view to_string(CircuitKind kind);

/// Number of fraction bits carried by shear factors and products.
inline constexpr unsigned kFractionBits = 4;

// Emitters ------------------------------------------------------------------

/// b <- a + b (mod 2^(n+1)); a.size() == n, b.size() == n + 1.
/// Structure: n carry blocks, one CNOT, n-1 inverse carry blocks, n sum blocks.
void emit_adder(Netlist& nl, const std::string& prefix,
                std::span<const WireId> a, std::span<const WireId> b,
                GateRole role = GateRole::kCore);

/// b <- b - a (mod 2^(n+1)); the adder run backwards.
void emit_subtractor(Netlist& nl, const std::string& prefix,
                     std::span<const WireId> a, std::span<const WireId> b,
                     GateRole role = GateRole::kCore);

/// out <- out XOR (x << 1); n CNOTs. out.size() == x.size() + 1.
void emit_self_adder(Netlist& nl, std::span<const WireId> x,
                     std::span<const WireId> out,
                     GateRole role = GateRole::kCore);

/// product <- product + c * a * x, with n = x.size() stages.
///
/// Stage i computes the flag t = c AND x_i (Toffoli), doubles the running
/// multiplicand 2^i a into the next chain register (self-adder of width m+i),
/// adds 2^i a gated by t into product[0 .. m+i] (adder of width m+i) and
/// clears t (Toffoli). The per-bit gating of the addend is tagged
/// kConditioning; unwinding the doubling chain is tagged kUncompute.
void emit_ctrl_multi(Netlist& nl, const std::string& prefix, WireId control,
                     std::span<const WireId> a, std::span<const WireId> x,
                     std::span<const WireId> product);

/// out <- integer + frac[3]: one CNOT of b3 into out[0], then one adder of
/// width integer.size(). `out` must start at 0 and have integer.size() + 1
/// wires.
void emit_interpolation(Netlist& nl, const std::string& prefix,
                        std::span<const WireId> integer,
                        std::span<const WireId> frac,
                        std::span<const WireId> out);

// Standalone builders ---------------------------------------------------------

/// Throws ParameterError if n == 0.
Netlist build_adder(unsigned n);
Netlist build_subtractor(unsigned n);
Netlist build_self_adder(unsigned n);
/// n = multiplier width (stage count), m = multiplicand width.
Netlist build_ctrl_multi(unsigned n, unsigned m);
/// m = integer-part width.
Netlist build_interpolation(unsigned m);

/// Dispatches on kind. Every kind except ctrl-multi has a single width `n`
/// (for interpolation that is the integer-part width) and ignores `m`.
Netlist build_circuit(CircuitKind kind, unsigned n, unsigned m = 0);

// Evaluation --------------------------------------------------------------------

/// Operands by role. For the adder `a + b`; subtractor `b - a`; self-adder
/// doubles `a`; ctrl-multi computes `control ? a * b : 0` with `a` the
/// multiplicand and `b` the multiplier; interpolation rounds `a + b/16`.
struct Operands {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool control = true;
};

/// Plain integer reference for each circuit kind. Throws ParameterError when
/// an operand does not fit its declared width. `n`/`m` follow build_circuit.
std::uint64_t eval_semantic(CircuitKind kind, unsigned n, unsigned m,
                            const Operands& ops);

struct GateLevelResult {
  std::uint64_t value = 0;       // the circuit's result register
  bool ancillae_clean = false;   // every scratch wire back at 0
  bool operands_preserved = false;  // non-result inputs unchanged
};

/// Loads `ops` into a netlist made by build_circuit(kind, n, m), executes it
/// and reads back the result register. Throws PreconditionError when
/// `preset_output` is nonzero for kinds whose output must start at 0
/// (self-adder, ctrl-multi, interpolation).
GateLevelResult run_gate_level(CircuitKind kind, const Netlist& netlist,
                               unsigned n, unsigned m, const Operands& ops,
                               std::uint64_t preset_output = 0);

/// True if every wire of `reg` is 0.
bool all_zero(const BasisState& state, std::span<const WireId> reg);

}  // namespace qshear
