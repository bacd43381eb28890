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

// Closed-form CNOT-equivalent counts versus counts measured on the built
// netlists.
//
// Predicted counts (n = operand / coordinate width, m = multiplicand / factor
// width):
//   self-adder              n
//   adder                   28n - 12
//   interpolation           28n - 11
//   ctrl-multi              14.5 n (n + 2m - 1)
//   half shear              (14.5n + 29m + 69.5) n - 35
//   full shear (one axis)   29n^2 + 58mn + 139n - 70
//
// Only gates tagged GateRole::kCore enter the measured core count; dispatch,
// conditioning and uncompute gates are reported as overhead.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace qshear::audit {

using Count = boost::rational<std::int64_t>;

enum class FormulaKind : std::uint8_t {
  kSelfAdder,
  kAdder,
  kInterpolation,
  kCtrlMulti,
  kTopHalfShear,
  kFullHorizontalShear,
};

std::string_view to_string(FormulaKind kind);
bool needs_m(FormulaKind kind);

/// Exact rational prediction. Throws ParameterError when n == 0 or when m is
/// required and missing.
Count predict(FormulaKind kind, unsigned n, std::optional<unsigned> m = {});

struct Measurement {
  std::uint64_t core = 0;
  std::uint64_t overhead = 0;
};

Measurement measure(FormulaKind kind, unsigned n, std::optional<unsigned> m = {});

struct ReportRow {
  FormulaKind kind{};
  unsigned n = 0;
  std::optional<unsigned> m;
  Count predicted;
  std::uint64_t measured_core = 0;
  std::uint64_t overhead = 0;

  Count delta() const { return Count(static_cast<std::int64_t>(measured_core)) - predicted; }
};

struct AuditGrid {
  unsigned n_min = 2, n_max = 6;
  unsigned m_min = 4, m_max = 8;
};

struct GateCostReport {
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;

  /// True when every row has delta 0.
  bool all_match() const;
};

/// Width-only kinds are evaluated for each n in the grid; the m-dependent
/// kinds for each (n, m).
GateCostReport audit_report(const AuditGrid& grid = {});

/// CSV header `kind,n,m,predicted,measured_core,overhead,delta`.
void write_csv(std::ostream& out, const GateCostReport& report);
void write_table(std::ostream& out, const GateCostReport& report);

/// Rationals print as integers when integral, otherwise as `p/q`.
std::string format_count(const Count& c);

}  // namespace qshear::audit
