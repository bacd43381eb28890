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

#include "qshear/arithmetic.hpp"

#include <algorithm>

#include "qshear/error.hpp"

namespace qshear {

namespace {

Control on1(WireId w) { return {w, Polarity::kOnOne}; }

void require_width(unsigned n, const char* what) {
  if (n == 0) throw ParameterError(std::string(what) + " width must be >= 1");
}

void require_fits(std::uint64_t v, unsigned bits, const char* what) {
  if (bits < 64 && (v >> bits) != 0) {
    throw ParameterError(std::string(what) + " = " + std::to_string(v) +
                         " does not fit in " + std::to_string(bits) + " bits");
  }
}

std::uint64_t mask(unsigned bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

std::string_view to_string(CircuitKind kind) {
  switch (kind) {
    case CircuitKind::kAdder: return "adder";
    case CircuitKind::kSubtractor: return "subtractor";
    case CircuitKind::kSelfAdder: return "self_adder";
    case CircuitKind::kCtrlMulti: return "ctrl_multi";
    case CircuitKind::kInterpolation: return "interpolation";
  }
  return "?";
}

namespace {

// Ripple-carry adder gate list over b <- a + b with carry wires c.
std::vector<Gate> adder_gates(std::span<const WireId> a,
                              std::span<const WireId> b, const Register& c,
                              GateRole role) {
  const std::size_t n = a.size();
  std::vector<Gate> g;
  g.reserve(7 * n);
  // c_{i+1} lives in c[i+1] for i < n-1, and in b[n] for the top block.
  auto next = [&](std::size_t i) { return i + 1 < n ? c[i + 1] : b[n]; };
  auto carry = [&](std::size_t i) {
    g.push_back(Gate::Toffoli(on1(a[i]), on1(b[i]), next(i), role));
    g.push_back(Gate::Cnot(on1(a[i]), b[i], role));
    g.push_back(Gate::Toffoli(on1(c[i]), on1(b[i]), next(i), role));
  };
  auto carry_inverse = [&](std::size_t i) {
    g.push_back(Gate::Toffoli(on1(c[i]), on1(b[i]), next(i), role));
    g.push_back(Gate::Cnot(on1(a[i]), b[i], role));
    g.push_back(Gate::Toffoli(on1(a[i]), on1(b[i]), next(i), role));
  };
  auto sum = [&](std::size_t i) {
    g.push_back(Gate::Cnot(on1(a[i]), b[i], role));
    g.push_back(Gate::Cnot(on1(c[i]), b[i], role));
  };

  for (std::size_t i = 0; i < n; ++i) carry(i);
  g.push_back(Gate::Cnot(on1(a[n - 1]), b[n - 1], role));
  sum(n - 1);
  for (std::size_t i = n - 1; i-- > 0;) {
    carry_inverse(i);
    sum(i);
  }
  return g;
}

Register adder_scratch(Netlist& nl, const std::string& prefix,
                       std::span<const WireId> a, std::span<const WireId> b) {
  if (a.empty()) throw ParameterError("adder width must be >= 1");
  if (b.size() != a.size() + 1) {
    throw ParameterError("adder b register must be one bit wider than a");
  }
  return nl.add_register(prefix + "carry", a.size());
}

}  // namespace

void emit_adder(Netlist& nl, const std::string& prefix,
                std::span<const WireId> a, std::span<const WireId> b,
                GateRole role) {
  const Register c = adder_scratch(nl, prefix, a, b);
  for (Gate& g : adder_gates(a, b, c, role)) nl.add(std::move(g));
}

void emit_subtractor(Netlist& nl, const std::string& prefix,
                     std::span<const WireId> a, std::span<const WireId> b,
                     GateRole role) {
  const Register c = adder_scratch(nl, prefix, a, b);
  auto gates = adder_gates(a, b, c, role);
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) nl.add(std::move(*it));
}

void emit_self_adder(Netlist& nl, std::span<const WireId> x,
                     std::span<const WireId> out, GateRole role) {
  if (x.empty()) throw ParameterError("self-adder width must be >= 1");
  if (out.size() != x.size() + 1) {
    throw ParameterError("self-adder output must be one bit wider than input");
  }
  for (std::size_t i = x.size(); i-- > 0;) nl.add_cnot(on1(x[i]), out[i + 1], role);
}

void emit_ctrl_multi(Netlist& nl, const std::string& prefix, WireId control,
                     std::span<const WireId> a, std::span<const WireId> x,
                     std::span<const WireId> product) {
  const std::size_t m = a.size();
  const std::size_t n = x.size();
  if (m == 0 || n == 0) throw ParameterError("multiplier widths must be >= 1");
  if (product.size() != m + n) {
    throw ParameterError("product register must have m + n wires");
  }

  const WireId flag = nl.add_wire(prefix + "flag");
  std::vector<Register> chain(n + 1);
  chain[0].assign(a.begin(), a.end());
  for (std::size_t i = 1; i <= n; ++i) {
    chain[i] = nl.add_register(prefix + "double" + std::to_string(i), m + i);
  }
  const Register addend = nl.add_register(prefix + "addend", m + n - 1);

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t w = m + i;
    const Register& src = chain[i];

    nl.add_toffoli(on1(control), on1(x[i]), flag);
    emit_self_adder(nl, src, chain[i + 1]);
    // src = 2^i a has zeros below bit i.
    for (std::size_t j = i; j < w; ++j) {
      nl.add_toffoli(on1(flag), on1(src[j]), addend[j], GateRole::kConditioning);
    }
    emit_adder(nl, prefix + "s" + std::to_string(i) + ".",
               std::span(addend).first(w), product.first(w + 1));
    for (std::size_t j = i; j < w; ++j) {
      nl.add_toffoli(on1(flag), on1(src[j]), addend[j], GateRole::kConditioning);
    }
    nl.add_toffoli(on1(control), on1(x[i]), flag);
  }
  for (std::size_t i = n; i-- > 0;) {
    emit_self_adder(nl, chain[i], chain[i + 1], GateRole::kUncompute);
  }
}

void emit_interpolation(Netlist& nl, const std::string& prefix,
                        std::span<const WireId> integer,
                        std::span<const WireId> frac,
                        std::span<const WireId> out) {
  if (integer.empty()) throw ParameterError("interpolation width must be >= 1");
  if (frac.size() != kFractionBits) {
    throw ParameterError("interpolation expects 4 fraction bits");
  }
  if (out.size() != integer.size() + 1) {
    throw ParameterError("interpolation output must be one bit wider");
  }
  nl.add_cnot(on1(frac[kFractionBits - 1]), out[0]);
  emit_adder(nl, prefix, integer, out);
}

Netlist build_adder(unsigned n) {
  require_width(n, "adder");
  Netlist nl;
  const Register a = nl.add_register("a", n);
  const Register b = nl.add_register("b", n + 1);
  emit_adder(nl, "", a, b);
  nl.name_register("ancillae", nl.reg("carry"));
  return nl;
}

Netlist build_subtractor(unsigned n) {
  require_width(n, "subtractor");
  return invert(build_adder(n));
}

Netlist build_self_adder(unsigned n) {
  require_width(n, "self-adder");
  Netlist nl;
  const Register x = nl.add_register("x", n);
  const Register out = nl.add_register("out", n + 1);
  emit_self_adder(nl, x, out);
  nl.name_register("ancillae", {});
  return nl;
}

Netlist build_ctrl_multi(unsigned n, unsigned m) {
  require_width(n, "multiplier");
  require_width(m, "multiplicand");
  Netlist nl;
  const Register c = nl.add_register("c", 1);
  const Register a = nl.add_register("a", m);
  const Register x = nl.add_register("x", n);
  const Register product = nl.add_register("product", m + n);
  const std::size_t scratch_begin = nl.wire_count();
  emit_ctrl_multi(nl, "mul.", c[0], a, x, product);
  Register scratch;
  for (std::size_t w = scratch_begin; w < nl.wire_count(); ++w) {
    scratch.push_back(static_cast<WireId>(w));
  }
  nl.name_register("ancillae", std::move(scratch));
  return nl;
}

Netlist build_interpolation(unsigned m) {
  require_width(m, "interpolation");
  Netlist nl;
  const Register a = nl.add_register("a", m);
  const Register frac = nl.add_register("frac", kFractionBits);
  const Register d = nl.add_register("d", m + 1);
  emit_interpolation(nl, "", a, frac, d);
  nl.name_register("ancillae", nl.reg("carry"));
  return nl;
}

Netlist build_circuit(CircuitKind kind, unsigned n, unsigned m) {
  switch (kind) {
    case CircuitKind::kAdder: return build_adder(n);
    case CircuitKind::kSubtractor: return build_subtractor(n);
    case CircuitKind::kSelfAdder: return build_self_adder(n);
    case CircuitKind::kCtrlMulti: return build_ctrl_multi(n, m);
    case CircuitKind::kInterpolation: return build_interpolation(n);
  }
  throw ParameterError("unknown circuit kind");
}

std::uint64_t eval_semantic(CircuitKind kind, unsigned n, unsigned m,
                            const Operands& ops) {
  switch (kind) {
    case CircuitKind::kAdder:
      require_width(n, "adder");
      require_fits(ops.a, n, "a");
      require_fits(ops.b, n, "b");
      return ops.a + ops.b;
    case CircuitKind::kSubtractor:
      require_width(n, "subtractor");
      require_fits(ops.a, n, "a");
      require_fits(ops.b, n + 1, "b");
      return (ops.b - ops.a) & mask(n + 1);
    case CircuitKind::kSelfAdder:
      require_width(n, "self-adder");
      require_fits(ops.a, n, "x");
      return ops.a << 1;
    case CircuitKind::kCtrlMulti:
      require_width(n, "multiplier");
      require_width(m, "multiplicand");
      require_fits(ops.a, m, "a");
      require_fits(ops.b, n, "x");
      return ops.control ? ops.a * ops.b : 0;
    case CircuitKind::kInterpolation:
      require_width(n, "interpolation");
      require_fits(ops.a, n, "integer part");
      require_fits(ops.b, kFractionBits, "fraction");
      // Round half up: add the first fraction bit.
      return ops.a + (ops.b >> (kFractionBits - 1));
  }
  throw ParameterError("unknown circuit kind");
}

bool all_zero(const BasisState& state, std::span<const WireId> reg) {
  return std::none_of(reg.begin(), reg.end(),
                      [&](WireId w) { return state.get(w); });
}

GateLevelResult run_gate_level(CircuitKind kind, const Netlist& nl, unsigned n,
                               unsigned m, const Operands& ops,
                               std::uint64_t preset_output) {
  // Width checks share the semantic evaluator's rules.
  (void)eval_semantic(kind, n, m, ops);

  BasisState s = nl.zero_state();
  GateLevelResult r;
  switch (kind) {
    case CircuitKind::kAdder:
    case CircuitKind::kSubtractor: {
      load(s, nl, "a", ops.a);
      load(s, nl, "b", ops.b);
      execute_in_place(nl, s);
      r.value = read(s, nl, "b");
      r.operands_preserved = read(s, nl, "a") == ops.a;
      break;
    }
    case CircuitKind::kSelfAdder: {
      if (preset_output != 0) {
        throw PreconditionError("self-adder output register must start at 0");
      }
      load(s, nl, "x", ops.a);
      execute_in_place(nl, s);
      r.value = read(s, nl, "out");
      r.operands_preserved = read(s, nl, "x") == ops.a;
      break;
    }
    case CircuitKind::kCtrlMulti: {
      if (preset_output != 0) {
        throw PreconditionError("multiplier product register must start at 0");
      }
      load(s, nl, "c", ops.control ? 1 : 0);
      load(s, nl, "a", ops.a);
      load(s, nl, "x", ops.b);
      execute_in_place(nl, s);
      r.value = read(s, nl, "product");
      r.operands_preserved = read(s, nl, "a") == ops.a &&
                             read(s, nl, "x") == ops.b &&
                             read(s, nl, "c") == (ops.control ? 1U : 0U);
      break;
    }
    case CircuitKind::kInterpolation: {
      if (preset_output != 0) {
        throw PreconditionError("interpolation output register must start at 0");
      }
      load(s, nl, "a", ops.a);
      load(s, nl, "frac", ops.b);
      execute_in_place(nl, s);
      r.value = read(s, nl, "d");
      r.operands_preserved =
          read(s, nl, "a") == ops.a && read(s, nl, "frac") == ops.b;
      break;
    }
  }
  r.ancillae_clean = all_zero(s, nl.reg("ancillae"));
  return r;
}

}  // namespace qshear
