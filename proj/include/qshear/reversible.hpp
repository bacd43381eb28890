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

// Classical reversible circuits over NOT / CNOT / Toffoli gates.
//
// A Netlist owns a wire table, an ordered gate list and a set of named
// registers (ordered wire lists, least significant bit first). Execution is
// on computational-basis states only: every gate here permutes basis states,
// so running one basis assignment at a time is exact.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qshear {

using WireId = std::uint32_t;

/// Register = wires of one integer value, LSB first.
using Register = std::vector<WireId>;

enum class GateKind : std::uint8_t { kNot, kCnot, kToffoli };

enum class Polarity : std::uint8_t { kOnOne, kOnZero };

/// Cost class of a gate. Only kCore gates are compared against the closed-form
/// complexity formulas; the rest are reported as overhead.
enum class GateRole : std::uint8_t {
  kCore,
  kDispatch,      // half selection onto the multiplier control
  kConditioning,  // gating of the multiplier addend
  kUncompute,     // returning work registers to zero
};

struct Control {
  WireId wire = 0;
  Polarity polarity = Polarity::kOnOne;

  friend bool operator==(const Control&, const Control&) = default;
};

struct Gate {
  GateKind kind = GateKind::kNot;
  std::vector<Control> controls;
  WireId target = 0;
  GateRole role = GateRole::kCore;

  static Gate Not(WireId target, GateRole role = GateRole::kCore);
  static Gate Cnot(Control control, WireId target,
                   GateRole role = GateRole::kCore);
  static Gate Toffoli(Control c1, Control c2, WireId target,
                      GateRole role = GateRole::kCore);

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Throws StructuralError if the control count does not match the kind, the
/// target appears among the controls, or controls repeat.
void check_gate_shape(const Gate& gate);

struct GateCost {
  std::uint64_t cnot_equivalents = 0;

  GateCost& operator+=(GateCost other) {
    cnot_equivalents += other.cnot_equivalents;
    return *this;
  }
  friend GateCost operator+(GateCost a, GateCost b) { return a += b; }
  friend bool operator==(const GateCost&, const GateCost&) = default;
};

/// NOT = 1, CNOT = 1, TOFFOLI = 6, plus 2 per control-on-0.
GateCost gate_cost(const Gate& gate);

class BasisState {
 public:
  BasisState() = default;
  explicit BasisState(std::size_t wire_count) : bits_(wire_count, 0) {}

  std::size_t size() const { return bits_.size(); }
  bool get(WireId w) const { return bits_.at(w) != 0; }
  void set(WireId w, bool v) { bits_.at(w) = v ? 1 : 0; }
  void flip(WireId w) { bits_[w] ^= 1; }

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

class Netlist {
 public:
  Netlist() = default;

  /// Adds one wire; labels must be unique.
  WireId add_wire(std::string label);

  /// Adds `width` wires labelled name[0] .. name[width-1].
  Register add_register(const std::string& name, std::size_t width);

  /// Names an existing ordered wire list. Throws StructuralError if a wire is
  /// unknown or the name is taken.
  void name_register(const std::string& name, Register wires);

  /// Appends a gate after checking shape and wire bounds.
  void add(Gate gate);

  void add_not(WireId target, GateRole role = GateRole::kCore) {
    add(Gate::Not(target, role));
  }
  void add_cnot(Control c, WireId target, GateRole role = GateRole::kCore) {
    add(Gate::Cnot(c, target, role));
  }
  void add_toffoli(Control c1, Control c2, WireId target,
                   GateRole role = GateRole::kCore) {
    add(Gate::Toffoli(c1, c2, target, role));
  }

  /// Appends the inverse of gates [first, last) (reverse order) with `role`.
  void append_inverse_range(std::size_t first, std::size_t last, GateRole role);

  std::size_t wire_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::map<std::string, Register>& registers() const {
    return registers_;
  }
  const Register& reg(const std::string& name) const;
  bool has_register(const std::string& name) const {
    return registers_.contains(name);
  }
  std::optional<WireId> find_wire(std::string_view label) const;

  BasisState zero_state() const { return BasisState(wire_count()); }

  friend bool operator==(const Netlist&, const Netlist&) = default;
  friend Netlist invert(const Netlist& netlist);

 private:
  std::vector<std::string> labels_;
  std::vector<Gate> gates_;
  std::map<std::string, Register> registers_;
  std::map<std::string, WireId, std::less<>> index_;
};

/// Applies the gate sequence in order. Throws StructuralError if the state is
/// not total over the netlist's wires.
BasisState execute(const Netlist& netlist, BasisState input);

/// Same as execute, mutating `state` in place.
void execute_in_place(const Netlist& netlist, BasisState& state);

/// Gate order reversed; every primitive is self-inverse.
Netlist invert(const Netlist& netlist);

/// Gates of `second` appended after `first`. Both must share the wire table.
Netlist concat(const Netlist& first, const Netlist& second);

GateCost cost(const Netlist& netlist);
GateCost cost(const Netlist& netlist, GateRole role);

// Register helpers. Values are unsigned, LSB at index 0.
void load(BasisState& state, std::span<const WireId> reg, std::uint64_t value);
std::uint64_t read(const BasisState& state, std::span<const WireId> reg);
inline void load(BasisState& state, const Netlist& n, const std::string& name,
                 std::uint64_t value) {
  load(state, n.reg(name), value);
}
inline std::uint64_t read(const BasisState& state, const Netlist& n,
                          const std::string& name) {
  return read(state, n.reg(name));
}

/// Textual dump: a header of `wire` and `register` lines, then one gate per
/// line as `KIND target [controls]`, control-on-0 prefixed by `!`, and a
/// trailing `; role` for non-core gates.
std::string to_text(const Netlist& netlist);

/// Parses the to_text format. Throws StructuralError on unknown wires or
/// malformed lines.
Netlist from_text(std::string_view text);

std::string_view to_string(GateKind kind);
std::string_view to_string(GateRole role);

}  // namespace qshear
