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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "qshear/arithmetic.hpp"
#include "qshear/audit.hpp"
#include "qshear/error.hpp"
#include "qshear/oracle.hpp"
#include "qshear/reversible.hpp"
#include "qshear/shear.hpp"

namespace py = pybind11;

namespace {

using Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

template <typename T>
T pick(const std::map<std::string, T>& table, const std::string& key,
       const char* what) {
  const auto it = table.find(key);
  if (it == table.end()) {
    throw qshear::ParameterError(std::string("unknown ") + what + " '" + key + "'");
  }
  return it->second;
}

qshear::ExecutionMode parse_mode(const std::string& s) {
  return pick<qshear::ExecutionMode>(
      {{"semantic", qshear::ExecutionMode::kSemantic},
       {"netlist", qshear::ExecutionMode::kNetlist}},
      s, "mode");
}

qshear::HalfOrder parse_order(const std::string& s) {
  return pick<qshear::HalfOrder>({{"low-first", qshear::HalfOrder::kLowFirst},
                                  {"high-first", qshear::HalfOrder::kHighFirst}},
                                 s, "order");
}

qshear::Canvas parse_canvas(const std::string& s) {
  return pick<qshear::Canvas>(
      {{"clip", qshear::Canvas::kClip}, {"expand", qshear::Canvas::kExpand}}, s,
      "canvas");
}

qshear::ShearAxis parse_axis(const std::string& s) {
  return pick<qshear::ShearAxis>({{"horizontal", qshear::ShearAxis::kHorizontal},
                                  {"vertical", qshear::ShearAxis::kVertical}},
                                 s, "axis");
}

qshear::CircuitKind parse_circuit(const std::string& s) {
  return pick<qshear::CircuitKind>(
      {{"adder", qshear::CircuitKind::kAdder},
       {"subtractor", qshear::CircuitKind::kSubtractor},
       {"self_adder", qshear::CircuitKind::kSelfAdder},
       {"ctrl_multi", qshear::CircuitKind::kCtrlMulti},
       {"interpolation", qshear::CircuitKind::kInterpolation}},
      s, "circuit");
}

qshear::audit::FormulaKind parse_formula(const std::string& s) {
  using qshear::audit::FormulaKind;
  return pick<FormulaKind>(
      {{"self_adder", FormulaKind::kSelfAdder},
       {"adder", FormulaKind::kAdder},
       {"interpolation", FormulaKind::kInterpolation},
       {"ctrl_multi", FormulaKind::kCtrlMulti},
       {"top_half_shear", FormulaKind::kTopHalfShear},
       {"full_horizontal_shear", FormulaKind::kFullHorizontalShear}},
      s, "formula");
}

qshear::Raster to_raster(const Array& image) {
  if (image.ndim() != 2) throw qshear::FormatError("image must be a 2-D array");
  qshear::Raster r(static_cast<std::size_t>(image.shape(0)),
                   static_cast<std::size_t>(image.shape(1)));
  const std::uint8_t* data = image.data();
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = data[i];
  return r;
}

Array to_array(const qshear::Raster& r) {
  Array out({r.rows, r.cols});
  std::uint8_t* data = out.mutable_data();
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    data[i] = static_cast<std::uint8_t>(r.values[i]);
  }
  return out;
}

Array to_array(const qshear::NEQRImage& img) { return to_array(qshear::decode(img)); }

py::tuple count_pair(const qshear::audit::Count& c) {
  return py::make_tuple(c.numerator(), c.denominator());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Three-shear NEQR image rotation over reversible circuits";

  auto base = py::register_exception<qshear::Error>(m, "QshearError", PyExc_ValueError);
  py::register_exception<qshear::StructuralError>(m, "StructuralError", base);
  py::register_exception<qshear::ParameterError>(m, "ParameterError", base);
  py::register_exception<qshear::PreconditionError>(m, "PreconditionError", base);
  py::register_exception<qshear::FormatError>(m, "FormatError", base);
  py::register_exception<qshear::RangeError>(m, "RangeError", base);
  py::register_exception<qshear::RoutingError>(m, "RoutingError", base);
  py::register_exception<qshear::UnsupportedAngleError>(m, "UnsupportedAngleError",
                                                        base);
  py::register_exception<qshear::IoError>(m, "IoError", base);

  m.def(
      "rotate",
      [](const Array& image, double degrees, const std::string& mode,
         const std::string& canvas, const std::string& order) {
        qshear::RotationOptions opts;
        opts.mode = parse_mode(mode);
        opts.canvas = parse_canvas(canvas);
        opts.order = parse_order(order);
        const auto r = qshear::rotate(qshear::encode(to_raster(image)), degrees, opts);
        return py::make_tuple(to_array(r.phase1), to_array(r.phase2),
                              to_array(r.final_image));
      },
      py::arg("image"), py::arg("degrees"), py::arg("mode") = "semantic",
      py::arg("canvas") = "clip", py::arg("order") = "low-first",
      "Rotates counter-clockwise; returns (phase1, phase2, final).");

  m.def(
      "shear",
      [](const Array& image, const std::string& axis, double factor,
         const std::string& mode, const std::string& order) {
        const auto img = qshear::encode(to_raster(image));
        const auto spec = qshear::ShearSpec::with_factor(parse_axis(axis), img.n(), factor);
        return to_array(
            qshear::apply_shear(img, spec, {parse_mode(mode), parse_order(order)}));
      },
      py::arg("image"), py::arg("axis"), py::arg("factor"),
      py::arg("mode") = "semantic", py::arg("order") = "low-first");

  m.def(
      "rotate_quarter_turns",
      [](const Array& image, int turns) {
        return to_array(
            qshear::rotate_quarter_turns(qshear::encode(to_raster(image)), turns));
      },
      py::arg("image"), py::arg("quarter_turns"));

  m.def(
      "quantize_factor",
      [](double f) { return qshear::quantize_factor(f).value(); }, py::arg("factor"));

  m.def(
      "oracle_rotate",
      [](const Array& image, double degrees) {
        return to_array(qshear::oracle::oracle_rotate(to_raster(image), degrees));
      },
      py::arg("image"), py::arg("degrees"));
  m.def(
      "oracle_shear",
      [](const Array& image, const std::string& axis, double factor) {
        return to_array(
            qshear::oracle::oracle_shear(to_raster(image), parse_axis(axis), factor));
      },
      py::arg("image"), py::arg("axis"), py::arg("factor"));
  m.def(
      "ideal_rotate",
      [](const Array& image, double degrees) {
        return to_array(qshear::oracle::ideal_rotate(to_raster(image), degrees));
      },
      py::arg("image"), py::arg("degrees"));
  m.def(
      "agreement_fraction",
      [](const Array& a, const Array& b) {
        return qshear::oracle::agreement_fraction(to_raster(a), to_raster(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "build_circuit",
      [](const std::string& kind, unsigned n, unsigned m_bits) {
        return qshear::to_text(qshear::build_circuit(parse_circuit(kind), n, m_bits));
      },
      py::arg("kind"), py::arg("n"), py::arg("m") = 0,
      "Netlist text dump of an arithmetic circuit.");
  m.def(
      "build_half_shear",
      [](const std::string& axis, bool high, unsigned n, unsigned m_bits,
         bool negative) {
        return qshear::to_text(qshear::build_half_shear(
            parse_axis(axis), high ? qshear::Half::kHigh : qshear::Half::kLow, n,
            m_bits, negative));
      },
      py::arg("axis"), py::arg("high"), py::arg("n"), py::arg("m"),
      py::arg("negative") = false);
  m.def(
      "netlist_cost",
      [](const std::string& text, std::optional<std::string> role) {
        const auto nl = qshear::from_text(text);
        if (!role) return qshear::cost(nl).cnot_equivalents;
        for (auto r : {qshear::GateRole::kCore, qshear::GateRole::kDispatch,
                       qshear::GateRole::kConditioning, qshear::GateRole::kUncompute}) {
          if (qshear::to_string(r) == *role) return qshear::cost(nl, r).cnot_equivalents;
        }
        throw qshear::ParameterError("unknown role '" + *role + "'");
      },
      py::arg("text"), py::arg("role") = py::none());
  m.def(
      "run_circuit",
      [](const std::string& kind, unsigned n, unsigned m_bits, std::uint64_t a,
         std::uint64_t b, bool control) {
        const auto k = parse_circuit(kind);
        const auto r = qshear::run_gate_level(k, qshear::build_circuit(k, n, m_bits), n,
                                              m_bits, {a, b, control});
        return py::make_tuple(r.value, r.ancillae_clean, r.operands_preserved);
      },
      py::arg("kind"), py::arg("n"), py::arg("m") = 0, py::arg("a") = 0,
      py::arg("b") = 0, py::arg("control") = true,
      "Runs a circuit on one basis state; returns (value, ancillae_clean, "
      "operands_preserved).");
  m.def(
      "eval_semantic",
      [](const std::string& kind, unsigned n, unsigned m_bits, std::uint64_t a,
         std::uint64_t b, bool control) {
        return qshear::eval_semantic(parse_circuit(kind), n, m_bits, {a, b, control});
      },
      py::arg("kind"), py::arg("n"), py::arg("m") = 0, py::arg("a") = 0,
      py::arg("b") = 0, py::arg("control") = true);

  m.def(
      "predict",
      [](const std::string& kind, unsigned n, std::optional<unsigned> m_bits) {
        return count_pair(qshear::audit::predict(parse_formula(kind), n, m_bits));
      },
      py::arg("kind"), py::arg("n"), py::arg("m") = py::none(),
      "Closed-form count as (numerator, denominator).");
  m.def(
      "audit_rows",
      [](unsigned n_min, unsigned n_max, unsigned m_min, unsigned m_max) {
        py::list rows;
        for (const auto& r :
             qshear::audit::audit_report({n_min, n_max, m_min, m_max}).rows) {
          py::dict d;
          d["kind"] = std::string(qshear::audit::to_string(r.kind));
          d["n"] = r.n;
          d["m"] = r.m ? py::cast(*r.m) : py::none();
          d["predicted"] = count_pair(r.predicted);
          d["measured_core"] = r.measured_core;
          d["overhead"] = r.overhead;
          d["delta"] = count_pair(r.delta());
          rows.append(d);
        }
        return rows;
      },
      py::arg("n_min") = 2, py::arg("n_max") = 6, py::arg("m_min") = 4,
      py::arg("m_max") = 8);
}
