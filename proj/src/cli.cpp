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

#include "qshear/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include "qshear/audit.hpp"
#include "qshear/error.hpp"
#include "qshear/oracle.hpp"
#include "qshear/patterns.hpp"

namespace qshear::cli {

namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success (verify: all paths equal; audit: all deltas zero)\n"
    "  1  verify mismatch or audit delta\n"
    "  2  usage error\n"
    "  3  bad image format (PGM syntax, maxval != 255, non-square or\n"
    "     non power-of-two side, sample out of range)\n"
    "  4  unsupported angle (|angle| >= 90, or not a multiple of 90 with\n"
    "     --exact-turn)\n"
    "  5  file read or write failure\n"
    "  6  bad parameter (e.g. netlist mode above 64x64)\n";

NEQRImage load_image(const CommandConfig& c) {
  return encode(read_pgm_file(c.input));
}

void save(const std::string& path, const NEQRImage& img, PgmFormat f) {
  write_pgm_file(path, decode(img), f);
}

int do_rotate(const CommandConfig& c, std::ostream& out) {
  const NEQRImage img = load_image(c);
  if (c.exact_turn) {
    const double turns = c.angle / 90.0;
    if (std::abs(turns - std::round(turns)) > 1e-9) {
      throw UnsupportedAngleError("--exact-turn needs a multiple of 90 degrees");
    }
    save(c.output, rotate_quarter_turns(img, static_cast<int>(std::lround(turns))),
         c.format);
    out << "wrote " << c.output << "\n";
    return kOk;
  }
  const RotationResult r =
      rotate(img, c.angle, RotationOptions{c.mode, c.order, c.canvas});
  if (c.emit_intermediates) {
    save(phase_path(c.output, 1), r.phase1, c.format);
    save(phase_path(c.output, 2), r.phase2, c.format);
    out << "wrote " << phase_path(c.output, 1) << "\n"
        << "wrote " << phase_path(c.output, 2) << "\n";
  }
  save(c.output, r.final_image, c.format);
  out << "wrote " << c.output << "\n";
  return kOk;
}

int do_shear(const CommandConfig& c, std::ostream& out) {
  NEQRImage img = load_image(c);
  if (c.canvas == Canvas::kExpand) img = embed_centered(img);
  ShearSpec spec;
  if (c.factor) {
    spec = ShearSpec::with_factor(c.axis, img.n(), *c.factor);
  } else {
    if (!(std::abs(c.angle) < 90.0)) {
      throw UnsupportedAngleError("shear angle outside (-90, 90) degrees");
    }
    spec = c.axis == ShearAxis::kHorizontal
               ? ShearSpec::horizontal_for_angle(img.n(), c.angle)
               : ShearSpec::vertical_for_angle(img.n(), c.angle);
  }
  save(c.output, apply_shear(img, spec, ShearOptions{c.mode, c.order}), c.format);
  out << "factor " << spec.factor.value() << " (from " << spec.factor.true_value
      << ")\nwrote " << c.output << "\n";
  return kOk;
}

int do_audit(const CommandConfig& c, std::ostream& out) {
  const auto report =
      audit::audit_report({c.n_min, c.n_max, c.m_min, c.m_max});
  audit::write_table(out, report);

  // Informational: agreement with an ideal nearest-neighbour rotation.
  const Raster board = make_checkerboard(64, 8);
  const Raster sheared = decode(rotate(encode(board), 45.0).final_image);
  out << "quality: 64x64 checkerboard at 45 deg agrees with ideal rotation on "
      << oracle::agreement_fraction(sheared, oracle::ideal_rotate(board, 45.0)) * 100.0
      << "% of pixels (informational)\n";

  if (!c.report.empty()) {
    const std::string tmp = c.report + ".tmp";
    {
      std::ofstream f(tmp, std::ios::trunc);
      if (!f) throw IoError("cannot write " + tmp);
      audit::write_csv(f, report);
      if (!f.flush()) throw IoError("write failed for " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, c.report, ec);
    if (ec) throw IoError("cannot rename into " + c.report);
    out << "wrote " << c.report << "\n";
  }
  return report.all_match() ? kOk : kMismatch;
}

int do_verify(const CommandConfig& c, std::ostream& out) {
  Raster raster;
  if (!c.input.empty()) {
    raster = read_pgm_file(c.input);
  } else if (c.pattern == "checkerboard") {
    raster = make_checkerboard(c.size);
  } else if (c.pattern == "gradient") {
    raster = make_gradient(c.size);
  } else {
    raster = make_random(c.size);
  }
  const NEQRImage img = encode(raster);

  RotationOptions opts;
  opts.order = c.order;
  const Raster semantic = decode(rotate(img, c.angle, opts).final_image);
  opts.mode = ExecutionMode::kNetlist;
  const Raster netlist = decode(rotate(img, c.angle, opts).final_image);
  const Raster reference = oracle::oracle_rotate(raster, c.angle);

  const bool ns = netlist == semantic;
  const bool so = semantic == reference;
  out << "image " << raster.cols << "x" << raster.rows << ", angle " << c.angle
      << " deg\n"
      << "netlist == semantic: " << (ns ? "PASS" : "FAIL") << "\n"
      << "semantic == oracle: " << (so ? "PASS" : "FAIL") << "\n"
      << "netlist == semantic == oracle: " << (ns && so ? "PASS" : "FAIL")
      << "\n";
  return ns && so ? kOk : kMismatch;
}

}  // namespace

std::string phase_path(const std::string& output, int phase) {
  std::filesystem::path p(output);
  const std::string suffix = ".phase" + std::to_string(phase) + ".pgm";
  if (p.extension() == ".pgm") return (p.parent_path() / p.stem()).string() + suffix;
  return output + suffix;
}

int run(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.subcommand) {
      case Subcommand::kRotate: return do_rotate(c, out);
      case Subcommand::kShear: return do_shear(c, out);
      case Subcommand::kAudit: return do_audit(c, out);
      case Subcommand::kVerify: return do_verify(c, out);
    }
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kBadFormat;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kBadFormat;
  } catch (const UnsupportedAngleError& e) {
    err << "error: " << e.what() << "\n";
    return kBadAngle;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadParameter;
  }
  return kUsage;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-shear rotation of NEQR images over reversible circuits",
               "qshear"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);

  CommandConfig c;
  const std::map<std::string, ExecutionMode> modes{
      {"semantic", ExecutionMode::kSemantic}, {"netlist", ExecutionMode::kNetlist}};
  const std::map<std::string, Canvas> canvases{{"clip", Canvas::kClip},
                                               {"expand", Canvas::kExpand}};
  const std::map<std::string, HalfOrder> orders{
      {"low-first", HalfOrder::kLowFirst}, {"high-first", HalfOrder::kHighFirst}};
  const std::map<std::string, ShearAxis> axes{
      {"horizontal", ShearAxis::kHorizontal}, {"vertical", ShearAxis::kVertical}};
  const std::map<std::string, PgmFormat> formats{{"p2", PgmFormat::kAscii},
                                                 {"p5", PgmFormat::kBinary}};

  auto add_common = [&](CLI::App* s) {
    s->add_option("--mode", c.mode, "semantic (default) or netlist (n <= 6)")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
        ->option_text("semantic|netlist");
    s->add_option("--order", c.order,
                  "half dispatch order: low-first (top/left) or high-first")
        ->transform(CLI::CheckedTransformer(orders, CLI::ignore_case))
        ->option_text("low-first|high-first");
    s->add_option("--canvas", c.canvas,
                  "clip to the frame or expand to a 4x larger canvas")
        ->transform(CLI::CheckedTransformer(canvases, CLI::ignore_case))
        ->option_text("clip|expand");
  };
  auto add_io = [&](CLI::App* s) {
    s->add_option("-i,--input", c.input, "input PGM (P2 or P5)")->required();
    s->add_option("-o,--output", c.output, "output PGM")->required();
    s->add_option("--format", c.format, "output format p2 or p5 (default p5)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->option_text("p2|p5");
  };

  auto* rot = app.add_subcommand("rotate", "rotate counter-clockwise by --angle");
  add_io(rot);
  add_common(rot);
  rot->add_option("-a,--angle", c.angle, "degrees, |angle| < 90")->required();
  rot->add_flag("--emit-intermediates", c.emit_intermediates,
                "also write <output>.phase1.pgm and <output>.phase2.pgm");
  rot->add_flag("--exact-turn", c.exact_turn,
                "exact quarter-turn permutation for multiples of 90 degrees");
  rot->callback([&] { c.subcommand = Subcommand::kRotate; });

  auto* sh = app.add_subcommand("shear", "apply one centroid shear");
  add_io(sh);
  add_common(sh);
  sh->add_option("--axis", c.axis, "horizontal (tan(angle/2)) or vertical (sin(angle))")
      ->transform(CLI::CheckedTransformer(axes, CLI::ignore_case))
      ->option_text("horizontal|vertical");
  auto* angle_opt = sh->add_option("-a,--angle", c.angle, "degrees");
  sh->add_option("--factor", c.factor, "explicit signed shear factor")
      ->excludes(angle_opt);
  sh->callback([&] { c.subcommand = Subcommand::kShear; });

  auto* au = app.add_subcommand("audit", "compare gate counts with closed forms");
  au->add_option("--report", c.report, "CSV output path");
  au->add_option("--n-min", c.n_min)->check(CLI::PositiveNumber);
  au->add_option("--n-max", c.n_max)->check(CLI::PositiveNumber);
  au->add_option("--m-min", c.m_min)->check(CLI::Range(4U, 32U));
  au->add_option("--m-max", c.m_max)->check(CLI::Range(4U, 32U));
  au->callback([&] { c.subcommand = Subcommand::kAudit; });

  auto* ve = app.add_subcommand(
      "verify", "check netlist == semantic == oracle for one rotation");
  ve->add_option("-i,--input", c.input, "input PGM (default: synthetic image)");
  ve->add_option("-a,--angle", c.angle, "degrees")->required();
  ve->add_option("--size", c.size, "synthetic image side (default 16)")
      ->check(CLI::PositiveNumber);
  ve->add_option("--pattern", c.pattern, "checkerboard, gradient or random")
      ->check(CLI::IsMember({"checkerboard", "gradient", "random"}));
  ve->add_option("--order", c.order, "half dispatch order")
      ->transform(CLI::CheckedTransformer(orders, CLI::ignore_case))
        ->option_text("low-first|high-first");
  ve->callback([&] { c.subcommand = Subcommand::kVerify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  return run(c, out, err);
}

}  // namespace qshear::cli
