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

#include "qshear/reversible.hpp"

#include <algorithm>
#include <sstream>

#include "qshear/error.hpp"

namespace qshear {

Gate Gate::Not(WireId target, GateRole role) {
  return Gate{GateKind::kNot, {}, target, role};
}

Gate Gate::Cnot(Control control, WireId target, GateRole role) {
  return Gate{GateKind::kCnot, {control}, target, role};
}

Gate Gate::Toffoli(Control c1, Control c2, WireId target, GateRole role) {
  return Gate{GateKind::kToffoli, {c1, c2}, target, role};
}

void check_gate_shape(const Gate& gate) {
  std::size_t expected = 0;
  switch (gate.kind) {
    case GateKind::kNot: expected = 0; break;
    case GateKind::kCnot: expected = 1; break;
    case GateKind::kToffoli: expected = 2; break;
  }
  if (gate.controls.size() != expected) {
    throw StructuralError(std::string(to_string(gate.kind)) + " needs " +
                          std::to_string(expected) + " control(s), got " +
                          std::to_string(gate.controls.size()));
  }
  for (std::size_t i = 0; i < gate.controls.size(); ++i) {
    if (gate.controls[i].wire == gate.target) {
      throw StructuralError("gate target is also a control");
    }
    for (std::size_t j = i + 1; j < gate.controls.size(); ++j) {
      if (gate.controls[i].wire == gate.controls[j].wire) {
        throw StructuralError("gate repeats a control wire");
      }
    }
  }
}

GateCost gate_cost(const Gate& gate) {
  std::uint64_t c = gate.kind == GateKind::kToffoli ? 6 : 1;
  for (const auto& ctl : gate.controls) {
    if (ctl.polarity == Polarity::kOnZero) c += 2;
  }
  return {c};
}

WireId Netlist::add_wire(std::string label) {
  if (index_.contains(label)) {
    throw StructuralError("duplicate wire label '" + label + "'");
  }
  const auto id = static_cast<WireId>(labels_.size());
  index_.emplace(label, id);
  labels_.push_back(std::move(label));
  return id;
}

Register Netlist::add_register(const std::string& name, std::size_t width) {
  if (registers_.contains(name)) {
    throw StructuralError("duplicate register '" + name + "'");
  }
  Register r;
  r.reserve(width);
  for (std::size_t i = 0; i < width; ++i) {
    r.push_back(add_wire(name + "[" + std::to_string(i) + "]"));
  }
  registers_.emplace(name, r);
  return r;
}

void Netlist::name_register(const std::string& name, Register wires) {
  if (registers_.contains(name)) {
    throw StructuralError("duplicate register '" + name + "'");
  }
  for (WireId w : wires) {
    if (w >= wire_count()) {
      throw StructuralError("register '" + name + "' names unknown wire " +
                            std::to_string(w));
    }
  }
  registers_.emplace(name, std::move(wires));
}

void Netlist::add(Gate gate) {
  check_gate_shape(gate);
  if (gate.target >= wire_count()) {
    throw StructuralError("gate target wire " + std::to_string(gate.target) +
                          " outside wire table");
  }
  for (const auto& c : gate.controls) {
    if (c.wire >= wire_count()) {
      throw StructuralError("gate control wire " + std::to_string(c.wire) +
                            " outside wire table");
    }
  }
  gates_.push_back(std::move(gate));
}

void Netlist::append_inverse_range(std::size_t first, std::size_t last,
                                   GateRole role) {
  if (first > last || last > gates_.size()) {
    throw ParameterError("gate range out of bounds");
  }
  gates_.reserve(gates_.size() + (last - first));
  for (std::size_t i = last; i-- > first;) {
    Gate g = gates_[i];
    g.role = role;
    gates_.push_back(std::move(g));
  }
}

const Register& Netlist::reg(const std::string& name) const {
  auto it = registers_.find(name);
  if (it == registers_.end()) {
    throw StructuralError("no register named '" + name + "'");
  }
  return it->second;
}

std::optional<WireId> Netlist::find_wire(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void execute_in_place(const Netlist& netlist, BasisState& state) {
  if (state.size() != netlist.wire_count()) {
    throw StructuralError("basis state has " + std::to_string(state.size()) +
                          " wires, netlist has " +
                          std::to_string(netlist.wire_count()));
  }
  for (const Gate& g : netlist.gates()) {
    bool fire = true;
    for (const Control& c : g.controls) {
      const bool on = state.get(c.wire);
      fire = fire && (c.polarity == Polarity::kOnOne ? on : !on);
    }
    if (fire) state.flip(g.target);
  }
}

BasisState execute(const Netlist& netlist, BasisState input) {
  execute_in_place(netlist, input);
  return input;
}

Netlist invert(const Netlist& netlist) {
  Netlist out = netlist;
  std::reverse(out.gates_.begin(), out.gates_.end());
  return out;
}

Netlist concat(const Netlist& first, const Netlist& second) {
  if (first.labels() != second.labels()) {
    throw StructuralError("concat requires identical wire tables");
  }
  Netlist out = first;
  for (const Gate& g : second.gates()) out.add(g);
  return out;
}

GateCost cost(const Netlist& netlist) {
  GateCost total;
  for (const Gate& g : netlist.gates()) total += gate_cost(g);
  return total;
}

GateCost cost(const Netlist& netlist, GateRole role) {
  GateCost total;
  for (const Gate& g : netlist.gates()) {
    if (g.role == role) total += gate_cost(g);
  }
  return total;
}

void load(BasisState& state, std::span<const WireId> reg, std::uint64_t value) {
  if (reg.size() < 64 && (value >> reg.size()) != 0) {
    throw ParameterError("value " + std::to_string(value) + " does not fit in " +
                         std::to_string(reg.size()) + " bits");
  }
  for (std::size_t i = 0; i < reg.size(); ++i) {
    state.set(reg[i], i < 64 && ((value >> i) & 1U) != 0);
  }
}

std::uint64_t read(const BasisState& state, std::span<const WireId> reg) {
  if (reg.size() > 64) throw ParameterError("register wider than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (state.get(reg[i])) v |= std::uint64_t{1} << i;
  }
  return v;
}

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kNot: return "NOT";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kToffoli: return "TOFFOLI";
  }
  return "?";
}

std::string_view to_string(GateRole role) {
  switch (role) {
    case GateRole::kCore: return "core";
    case GateRole::kDispatch: return "dispatch";
    case GateRole::kConditioning: return "conditioning";
    case GateRole::kUncompute: return "uncompute";
  }
  return "?";
}

std::string to_text(const Netlist& netlist) {
  std::ostringstream os;
  const auto& labels = netlist.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    os << "wire " << labels[i] << "\n";
  }
  for (const auto& [name, wires] : netlist.registers()) {
    os << "register " << name;
    for (WireId w : wires) os << ' ' << labels[w];
    os << "\n";
  }
  for (const Gate& g : netlist.gates()) {
    os << to_string(g.kind) << ' ' << labels[g.target];
    for (const Control& c : g.controls) {
      os << ' ' << (c.polarity == Polarity::kOnZero ? "!" : "")
         << labels[c.wire];
    }
    if (g.role != GateRole::kCore) os << " ; " << to_string(g.role);
    os << "\n";
  }
  return os.str();
}

namespace {

WireId lookup(const Netlist& n, std::string_view label, std::size_t line_no) {
  auto w = n.find_wire(label);
  if (!w) {
    throw StructuralError("line " + std::to_string(line_no) +
                          ": unknown wire '" + std::string(label) + "'");
  }
  return *w;
}

GateRole parse_role(std::string_view s, std::size_t line_no) {
  for (auto r : {GateRole::kCore, GateRole::kDispatch, GateRole::kConditioning,
                 GateRole::kUncompute}) {
    if (to_string(r) == s) return r;
  }
  throw StructuralError("line " + std::to_string(line_no) + ": unknown role '" +
                        std::string(s) + "'");
}

}  // namespace

Netlist from_text(std::string_view text) {
  Netlist n;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string role_part;
    if (auto semi = line.find(';'); semi != std::string::npos) {
      role_part = line.substr(semi + 1);
      line.resize(semi);
    }
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0].starts_with('#')) continue;

    if (tok[0] == "wire") {
      if (tok.size() != 2) {
        throw StructuralError("line " + std::to_string(line_no) +
                              ": expected 'wire <label>'");
      }
      n.add_wire(tok[1]);
      continue;
    }
    if (tok[0] == "register") {
      if (tok.size() < 2) {
        throw StructuralError("line " + std::to_string(line_no) +
                              ": expected 'register <name> <wires...>'");
      }
      Register r;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        r.push_back(lookup(n, tok[i], line_no));
      }
      n.name_register(tok[1], std::move(r));
      continue;
    }

    Gate g;
    if (tok[0] == "NOT") {
      g.kind = GateKind::kNot;
    } else if (tok[0] == "CNOT") {
      g.kind = GateKind::kCnot;
    } else if (tok[0] == "TOFFOLI") {
      g.kind = GateKind::kToffoli;
    } else {
      throw StructuralError("line " + std::to_string(line_no) +
                            ": unknown gate '" + tok[0] + "'");
    }
    if (tok.size() < 2) {
      throw StructuralError("line " + std::to_string(line_no) +
                            ": missing target");
    }
    g.target = lookup(n, tok[1], line_no);
    for (std::size_t i = 2; i < tok.size(); ++i) {
      std::string_view t = tok[i];
      Control c;
      if (t.starts_with('!')) {
        c.polarity = Polarity::kOnZero;
        t.remove_prefix(1);
      }
      c.wire = lookup(n, t, line_no);
      g.controls.push_back(c);
    }
    std::istringstream rs(role_part);
    if (std::string r; rs >> r) g.role = parse_role(r, line_no);
    n.add(std::move(g));
  }
  return n;
}

}  // namespace qshear
