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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qshear/pgm.hpp"
#include "qshear/shear.hpp"

namespace qshear::cli {

/// Process exit codes; also listed in `qshear --help`.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,      // verify found a difference / audit found a delta
  kUsage = 2,         // bad command line
  kBadFormat = 3,     // unreadable or unsupported image
  kBadAngle = 4,      // angle outside (-90, 90) or not a quarter turn
  kIoFailure = 5,     // could not read or write a file
  kBadParameter = 6,  // e.g. image too large for netlist mode
};

enum class Subcommand { kRotate, kShear, kAudit, kVerify };

struct CommandConfig {
  Subcommand subcommand = Subcommand::kRotate;
  std::string input;
  std::string output;
  double angle = 0.0;
  ShearAxis axis = ShearAxis::kHorizontal;
  std::optional<double> factor;  // overrides the angle-derived shear factor
  ExecutionMode mode = ExecutionMode::kSemantic;
  Canvas canvas = Canvas::kClip;
  HalfOrder order = HalfOrder::kLowFirst;
  bool emit_intermediates = false;
  bool exact_turn = false;
  PgmFormat format = PgmFormat::kBinary;
  std::string report;  // audit CSV path
  unsigned n_min = 2, n_max = 6, m_min = 4, m_max = 8;
  std::size_t size = 16;           // verify: synthetic image side
  std::string pattern = "random";  // verify: checkerboard | gradient | random
};

/// Executes one parsed command.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Returns an ExitCode.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Path of an intermediate frame: "out.pgm" -> "out.phase1.pgm".
std::string phase_path(const std::string& output, int phase);

}  // namespace qshear::cli
