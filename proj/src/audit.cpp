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

#include "qshear/audit.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "qshear/arithmetic.hpp"
#include "qshear/error.hpp"
#include "qshear/reversible.hpp"
#include "qshear/shear.hpp"

namespace qshear::audit {

namespace {

constexpr FormulaKind kAllKinds[] = {
    FormulaKind::kSelfAdder,  FormulaKind::kAdder,
    FormulaKind::kInterpolation, FormulaKind::kCtrlMulti,
    FormulaKind::kTopHalfShear, FormulaKind::kFullHorizontalShear,
};

Count half(std::int64_t v) { return Count(v, 2); }

Measurement split(const Netlist& nl) {
  const auto total = cost(nl).cnot_equivalents;
  const auto core = cost(nl, GateRole::kCore).cnot_equivalents;
  return {core, total - core};
}

}  // namespace

std::string_view to_string(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::kSelfAdder: return "self_adder";
    case FormulaKind::kAdder: return "adder";
    case FormulaKind::kInterpolation: return "interpolation";
    case FormulaKind::kCtrlMulti: return "ctrl_multi";
    case FormulaKind::kTopHalfShear: return "top_half_shear";
    case FormulaKind::kFullHorizontalShear: return "full_horizontal_shear";
  }
  return "?";
}

bool needs_m(FormulaKind kind) {
  return kind == FormulaKind::kCtrlMulti || kind == FormulaKind::kTopHalfShear ||
         kind == FormulaKind::kFullHorizontalShear;
}

Count predict(FormulaKind kind, unsigned n_in, std::optional<unsigned> m_in) {
  if (n_in == 0) throw ParameterError("formula width n must be >= 1");
  if (needs_m(kind) && !m_in) {
    throw ParameterError(std::string(to_string(kind)) + " needs m");
  }
  const std::int64_t n = n_in;
  const std::int64_t m = m_in.value_or(0);
  switch (kind) {
    case FormulaKind::kSelfAdder: return Count(n);
    case FormulaKind::kAdder: return Count(28 * n - 12);
    case FormulaKind::kInterpolation: return Count(28 * n - 11);
    case FormulaKind::kCtrlMulti: return half(29) * n * (n + 2 * m - 1);
    case FormulaKind::kTopHalfShear:
      return (half(29) * n + 29 * m + half(139)) * n - 35;
    case FormulaKind::kFullHorizontalShear:
      return Count(29 * n * n + 58 * m * n + 139 * n - 70);
  }
  throw ParameterError("unknown formula kind");
}

Measurement measure(FormulaKind kind, unsigned n, std::optional<unsigned> m) {
  if (needs_m(kind) && !m) {
    throw ParameterError(std::string(to_string(kind)) + " needs m");
  }
  switch (kind) {
    case FormulaKind::kSelfAdder: return split(build_self_adder(n));
    case FormulaKind::kAdder: return split(build_adder(n));
    case FormulaKind::kInterpolation: return split(build_interpolation(n));
    case FormulaKind::kCtrlMulti: return split(build_ctrl_multi(n, *m));
    case FormulaKind::kTopHalfShear:
      return split(build_half_shear(ShearAxis::kHorizontal, Half::kLow, n, *m, false));
    case FormulaKind::kFullHorizontalShear:
      return split(build_full_shear(ShearAxis::kHorizontal, n, *m, false));
  }
  throw ParameterError("unknown formula kind");
}

bool GateCostReport::all_match() const {
  for (const auto& r : rows) {
    if (r.delta() != Count(0)) return false;
  }
  return true;
}

GateCostReport audit_report(const AuditGrid& grid) {
  if (grid.n_min == 0 || grid.n_min > grid.n_max || grid.m_min > grid.m_max) {
    throw ParameterError("empty or invalid audit grid");
  }
  GateCostReport report;
  for (FormulaKind kind : kAllKinds) {
    for (unsigned n = grid.n_min; n <= grid.n_max; ++n) {
      if (!needs_m(kind)) {
        const auto meas = measure(kind, n);
        report.rows.push_back({kind, n, std::nullopt, predict(kind, n),
                               meas.core, meas.overhead});
        continue;
      }
      for (unsigned m = grid.m_min; m <= grid.m_max; ++m) {
        const auto meas = measure(kind, n, m);
        report.rows.push_back({kind, n, m, predict(kind, n, m), meas.core,
                               meas.overhead});
      }
    }
  }
  report.notes = {
      "core = gates tagged core; overhead = half dispatch (control-on-0 costs "
      "+2), addend conditioning, and uncompute passes",
      "ctrl_multi prices a self-adder in every stage i = 0..n-1 (width m+i); "
      "the stage n-1 doubling output is unused by the product",
      "shear kinds: n = coordinate width (multiplier stages), m = factor "
      "width with 4 fraction bits",
  };
  return report;
}

std::string format_count(const Count& c) {
  std::ostringstream os;
  os << c.numerator();
  if (c.denominator() != std::int64_t{1}) os << '/' << c.denominator();
  return os.str();
}

void write_csv(std::ostream& out, const GateCostReport& report) {
  out << "kind,n,m,predicted,measured_core,overhead,delta\n";
  for (const auto& r : report.rows) {
    out << to_string(r.kind) << ',' << r.n << ','
        << (r.m ? std::to_string(*r.m) : std::string()) << ','
        << format_count(r.predicted) << ',' << r.measured_core << ','
        << r.overhead << ',' << format_count(r.delta()) << '\n';
  }
}

void write_table(std::ostream& out, const GateCostReport& report) {
  out << std::left << std::setw(22) << "kind" << std::right << std::setw(4)
      << "n" << std::setw(4) << "m" << std::setw(12) << "predicted"
      << std::setw(12) << "core" << std::setw(12) << "overhead"
      << std::setw(8) << "delta" << '\n';
  for (const auto& r : report.rows) {
    out << std::left << std::setw(22) << to_string(r.kind) << std::right
        << std::setw(4) << r.n << std::setw(4)
        << (r.m ? std::to_string(*r.m) : std::string("-")) << std::setw(12)
        << format_count(r.predicted) << std::setw(12) << r.measured_core
        << std::setw(12) << r.overhead << std::setw(8)
        << format_count(r.delta()) << '\n';
  }
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  out << (report.all_match() ? "all core counts match the closed forms\n"
                             : "MISMATCH: some core counts differ\n");
}

}  // namespace qshear::audit
