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

#include "qshear/shear.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <thread>

#include "qshear/arithmetic.hpp"
#include "qshear/error.hpp"

namespace qshear {

namespace {

double radians(double degrees) { return degrees * std::numbers::pi / 180.0; }

void check_angle(double degrees) {
  if (!(std::abs(degrees) < 90.0)) {
    throw UnsupportedAngleError("rotation angle " + std::to_string(degrees) +
                                " outside (-90, 90) degrees");
  }
}

void require_axis(const ShearSpec& spec, ShearAxis axis) {
  if (spec.axis != axis) {
    throw ParameterError(axis == ShearAxis::kHorizontal
                             ? "horizontal half-shear given a vertical spec"
                             : "vertical half-shear given a horizontal spec");
  }
}

void require_half(const PixelTerm& term, const ShearSpec& spec, Half half) {
  if (half_of(term, spec) != half) {
    throw RoutingError("pixel (" + std::to_string(term.y) + ", " +
                       std::to_string(term.x) +
                       ") routed to the wrong half-shear");
  }
}

ShearedTerm moved_by(const PixelTerm& term, ShearAxis axis, std::int64_t d) {
  ShearedTerm out{term.y, term.x, term.color};
  if (axis == ShearAxis::kHorizontal) {
    out.x += d;
  } else {
    out.y += d;
  }
  return out;
}

std::optional<PixelTerm> clip(const ShearedTerm& t, std::size_t side) {
  const auto s = static_cast<std::int64_t>(side);
  if (t.y < 0 || t.x < 0 || t.y >= s || t.x >= s) return std::nullopt;
  return PixelTerm{static_cast<std::uint32_t>(t.y),
                   static_cast<std::uint32_t>(t.x), t.color};
}

std::vector<PixelTerm> ordered_terms(const NEQRImage& image,
                                     const ShearSpec& spec, HalfOrder order) {
  std::vector<PixelTerm> terms = image.terms();
  if (image.n() == 0) return terms;
  const Half first = order == HalfOrder::kLowFirst ? Half::kLow : Half::kHigh;
  std::stable_partition(terms.begin(), terms.end(), [&](const PixelTerm& t) {
    return half_of(t, spec) == first;
  });
  return terms;
}

// Executes `netlist` on every term, split over hardware threads. Terms are
// independent basis-state runs; results are written by index.
std::vector<ShearedTerm> run_terms_parallel(const Netlist& netlist,
                                            const ShearSpec& spec,
                                            const std::vector<PixelTerm>& terms) {
  std::vector<ShearedTerm> out(terms.size());
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, 16);
  const std::size_t chunk = (terms.size() + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(terms.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, w, lo, hi] {
        try {
          for (std::size_t i = lo; i < hi; ++i) {
            out[i] = run_shear_netlist(netlist, spec, terms[i]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace

QuantizedFactor quantize_factor(double value) {
  if (!std::isfinite(value)) throw ParameterError("shear factor is not finite");
  QuantizedFactor q;
  q.true_value = value;
  q.negative = value < 0;
  q.sixteenths = static_cast<std::uint32_t>(std::floor(std::abs(value) * 16.0 + 0.5));
  if (q.sixteenths == 0) q.negative = false;
  return q;
}

ShearSpec ShearSpec::with_factor(ShearAxis axis, unsigned n, double factor) {
  ShearSpec s;
  s.axis = axis;
  s.n = n;
  s.factor = quantize_factor(factor);
  return s;
}

ShearSpec ShearSpec::horizontal_for_angle(unsigned n, double degrees) {
  return with_factor(ShearAxis::kHorizontal, n, std::tan(radians(degrees) / 2));
}

ShearSpec ShearSpec::vertical_for_angle(unsigned n, double degrees) {
  return with_factor(ShearAxis::kVertical, n, std::sin(radians(degrees)));
}

Half half_of(const PixelTerm& term, const ShearSpec& spec) {
  const std::uint32_t driver =
      spec.axis == ShearAxis::kHorizontal ? term.y : term.x;
  return driver < spec.median() ? Half::kLow : Half::kHigh;
}

std::int64_t displacement(const ShearSpec& spec, std::uint32_t driver) {
  if (spec.n == 0) return 0;
  const std::int64_t mid = spec.median();
  const bool low = driver < mid;
  const std::int64_t offset = low ? mid - driver : driver - mid;
  // Fixed point with 4 fraction bits; +8 then >>4 is round-half-up.
  const std::int64_t magnitude = (offset * spec.factor.sixteenths + 8) >> 4;
  int sign = low ? -1 : 1;
  if (spec.axis == ShearAxis::kVertical) sign = -sign;
  if (spec.factor.negative) sign = -sign;
  return sign * magnitude;
}

ShearedTerm shear_top_half(const PixelTerm& term, const ShearSpec& spec) {
  require_axis(spec, ShearAxis::kHorizontal);
  require_half(term, spec, Half::kLow);
  return moved_by(term, spec.axis, displacement(spec, term.y));
}

ShearedTerm shear_bottom_half(const PixelTerm& term, const ShearSpec& spec) {
  require_axis(spec, ShearAxis::kHorizontal);
  require_half(term, spec, Half::kHigh);
  return moved_by(term, spec.axis, displacement(spec, term.y));
}

ShearedTerm shear_left_half(const PixelTerm& term, const ShearSpec& spec) {
  require_axis(spec, ShearAxis::kVertical);
  require_half(term, spec, Half::kLow);
  return moved_by(term, spec.axis, displacement(spec, term.x));
}

ShearedTerm shear_right_half(const PixelTerm& term, const ShearSpec& spec) {
  require_axis(spec, ShearAxis::kVertical);
  require_half(term, spec, Half::kHigh);
  return moved_by(term, spec.axis, displacement(spec, term.x));
}

ShearedTerm shear_term(const PixelTerm& term, const ShearSpec& spec) {
  if (spec.n == 0) return {term.y, term.x, term.color};
  const bool low = half_of(term, spec) == Half::kLow;
  if (spec.axis == ShearAxis::kHorizontal) {
    return low ? shear_top_half(term, spec) : shear_bottom_half(term, spec);
  }
  return low ? shear_left_half(term, spec) : shear_right_half(term, spec);
}

NEQRImage apply_shear(const NEQRImage& image, const ShearSpec& spec,
                      const ShearOptions& options) {
  if (spec.n != image.n()) {
    throw ParameterError("shear spec is for n = " + std::to_string(spec.n) +
                         ", image has n = " + std::to_string(image.n()));
  }
  const std::vector<PixelTerm> terms = ordered_terms(image, spec, options.order);
  std::vector<ShearedTerm> sheared;
  if (options.mode == ExecutionMode::kNetlist && image.n() > 0) {
    if (image.n() > kMaxNetlistExponent) {
      throw ParameterError("netlist mode supports images up to " +
                           std::to_string(1U << kMaxNetlistExponent) + "x" +
                           std::to_string(1U << kMaxNetlistExponent));
    }
    const Netlist nl = build_full_shear(spec.axis, spec.n, spec.factor_bits,
                                        spec.factor.negative, options.order);
    sheared = run_terms_parallel(nl, spec, terms);
  } else {
    sheared.reserve(terms.size());
    for (const PixelTerm& t : terms) sheared.push_back(shear_term(t, spec));
  }

  std::vector<PixelTerm> kept;
  kept.reserve(sheared.size());
  for (const ShearedTerm& t : sheared) {
    if (auto p = clip(t, image.side())) kept.push_back(*p);
  }
  return NEQRImage::from_terms(image.n(), kept);
}

std::array<ShearSpec, 3> rotation_phases(unsigned n, double degrees,
                                         unsigned factor_bits) {
  check_angle(degrees);
  std::array<ShearSpec, 3> phases = {
      ShearSpec::horizontal_for_angle(n, degrees),
      ShearSpec::vertical_for_angle(n, degrees),
      ShearSpec::horizontal_for_angle(n, degrees),
  };
  for (auto& p : phases) p.factor_bits = factor_bits;
  return phases;
}

RotationResult rotate(const NEQRImage& image, double degrees,
                      const RotationOptions& options) {
  check_angle(degrees);
  const NEQRImage input =
      options.canvas == Canvas::kExpand ? embed_centered(image) : image;
  const auto phases = rotation_phases(input.n(), degrees, options.factor_bits);
  const ShearOptions so{options.mode, options.order};
  RotationResult r;
  r.phase1 = apply_shear(input, phases[0], so);
  r.phase2 = apply_shear(r.phase1, phases[1], so);
  r.final_image = apply_shear(r.phase2, phases[2], so);
  return r;
}

NEQRImage embed_centered(const NEQRImage& image, unsigned extra_bits) {
  NEQRImage out(image.n() + extra_bits);
  auto mid = [](unsigned n) -> std::size_t { return n == 0 ? 0 : std::size_t{1} << (n - 1); };
  const std::size_t offset = mid(out.n()) - mid(image.n());
  for (std::size_t y = 0; y < image.side(); ++y) {
    for (std::size_t x = 0; x < image.side(); ++x) {
      out.set_color(y + offset, x + offset, image.color(y, x));
    }
  }
  return out;
}

NEQRImage rotate_quarter_turns(const NEQRImage& image, int quarter_turns) {
  const int k = ((quarter_turns % 4) + 4) % 4;
  NEQRImage out(image.n());
  const std::size_t s = image.side();
  for (std::size_t y = 0; y < s; ++y) {
    for (std::size_t x = 0; x < s; ++x) {
      std::size_t sy = y, sx = x;  // source of output pixel (y, x)
      switch (k) {
        case 1: sy = x; sx = s - 1 - y; break;
        case 2: sy = s - 1 - y; sx = s - 1 - x; break;
        case 3: sy = s - 1 - x; sx = y; break;
        default: break;
      }
      out.set_color(y, x, image.color(sy, sx));
    }
  }
  return out;
}

// Gate level ------------------------------------------------------------------

void emit_half_shear(Netlist& nl, const std::string& prefix, ShearAxis axis,
                     Half half, bool negative_factor, const Register& x,
                     const Register& y, const Register& mid,
                     const Register& factor) {
  const std::size_t n = x.size() - 1;
  const std::size_t m = factor.size();
  if (n == 0) throw ParameterError("half-shear needs n >= 1");
  if (m < kFractionBits) {
    throw ParameterError("factor register needs at least 4 fraction bits");
  }
  if (y.size() != n + 1 || mid.size() != n + 1) {
    throw ParameterError("x, y and mid registers must all have n + 1 wires");
  }

  const bool horizontal = axis == ShearAxis::kHorizontal;
  const Register& driver = horizontal ? y : x;
  const Register& moved = horizontal ? x : y;
  const std::span<const WireId> driver_low(driver.data(), n);
  const std::span<const WireId> mid_low(mid.data(), n);

  const WireId c = nl.add_wire(prefix + "c");
  const Register product = nl.add_register(prefix + "product", m + n);
  const Register disp = nl.add_register(prefix + "disp", n + 1);
  const Control select{driver[n - 1],
                       half == Half::kLow ? Polarity::kOnZero : Polarity::kOnOne};

  nl.add_cnot(select, c, GateRole::kDispatch);
  const std::size_t first = nl.gates().size();

  std::span<const WireId> offset;
  if (half == Half::kLow) {
    emit_subtractor(nl, prefix + "offset.", driver_low, mid);
    offset = mid_low;
  } else {
    emit_subtractor(nl, prefix + "offset.", mid_low, driver);
    offset = driver_low;
  }
  const std::span<const WireId> p(product);
  emit_ctrl_multi(nl, prefix + "mul.", c, factor, offset, product);
  emit_interpolation(nl, prefix + "ip.", p.subspan(kFractionBits, n),
                     p.first(kFractionBits), disp);
  const std::size_t last = nl.gates().size();

  // Direction: top moves -x, bottom +x, left +y, right -y; a negative factor
  // flips it.
  bool add = (half == Half::kHigh) == horizontal;
  if (negative_factor) add = !add;
  const std::span<const WireId> disp_low(disp.data(), n);
  if (add) {
    emit_adder(nl, prefix + "move.", disp_low, moved);
  } else {
    emit_subtractor(nl, prefix + "move.", disp_low, moved);
  }

  nl.append_inverse_range(first, last, GateRole::kUncompute);
  nl.add_cnot(select, c, GateRole::kDispatch);
}

namespace {

struct ShearRegisters {
  Register x, y, mid, factor;
};

ShearRegisters add_shear_registers(Netlist& nl, unsigned n, unsigned m) {
  if (n == 0) throw ParameterError("shear circuits need n >= 1");
  if (m < kFractionBits) {
    throw ParameterError("factor register needs at least 4 fraction bits");
  }
  return {nl.add_register("x", n + 1), nl.add_register("y", n + 1),
          nl.add_register("mid", n + 1), nl.add_register("factor", m)};
}

void name_scratch(Netlist& nl, std::size_t from) {
  Register scratch;
  for (std::size_t w = from; w < nl.wire_count(); ++w) {
    scratch.push_back(static_cast<WireId>(w));
  }
  nl.name_register("ancillae", std::move(scratch));
}

std::string half_name(ShearAxis axis, Half half) {
  if (axis == ShearAxis::kHorizontal) return half == Half::kLow ? "top." : "bottom.";
  return half == Half::kLow ? "left." : "right.";
}

}  // namespace

Netlist build_half_shear(ShearAxis axis, Half half, unsigned n, unsigned m,
                         bool negative_factor) {
  Netlist nl;
  const auto r = add_shear_registers(nl, n, m);
  const std::size_t scratch = nl.wire_count();
  emit_half_shear(nl, half_name(axis, half), axis, half, negative_factor, r.x,
                  r.y, r.mid, r.factor);
  name_scratch(nl, scratch);
  return nl;
}

Netlist build_full_shear(ShearAxis axis, unsigned n, unsigned m,
                         bool negative_factor, HalfOrder order) {
  Netlist nl;
  const auto r = add_shear_registers(nl, n, m);
  const std::size_t scratch = nl.wire_count();
  const std::array<Half, 2> halves =
      order == HalfOrder::kLowFirst ? std::array{Half::kLow, Half::kHigh}
                                    : std::array{Half::kHigh, Half::kLow};
  for (Half h : halves) {
    emit_half_shear(nl, half_name(axis, h), axis, h, negative_factor, r.x, r.y,
                    r.mid, r.factor);
  }
  name_scratch(nl, scratch);
  return nl;
}

std::int64_t decode_coordinate(std::uint64_t reg_value, unsigned n) {
  const std::int64_t modulus = std::int64_t{1} << (n + 1);
  const std::int64_t low = n == 0 ? 0 : std::int64_t{1} << (n - 1);
  const auto v = static_cast<std::int64_t>(reg_value) & (modulus - 1);
  return ((v + low) & (modulus - 1)) - low;
}

ShearedTerm run_shear_netlist(const Netlist& nl, const ShearSpec& spec,
                              const PixelTerm& term) {
  const unsigned n = spec.n;
  if (spec.factor.sixteenths > 16) {
    throw ParameterError("shear circuits accept factor magnitudes up to 1");
  }
  BasisState s = nl.zero_state();
  load(s, nl, "x", term.x);
  load(s, nl, "y", term.y);
  load(s, nl, "mid", spec.median());
  load(s, nl, "factor", spec.factor.sixteenths);
  execute_in_place(nl, s);

  ShearedTerm out{term.y, term.x, term.color};
  if (spec.axis == ShearAxis::kHorizontal) {
    out.x = decode_coordinate(read(s, nl, "x"), n);
    if (read(s, nl, "y") != term.y) throw StructuralError("shear altered y");
  } else {
    out.y = decode_coordinate(read(s, nl, "y"), n);
    if (read(s, nl, "x") != term.x) throw StructuralError("shear altered x");
  }
  if (read(s, nl, "mid") != spec.median() ||
      !all_zero(s, nl.reg("ancillae"))) {
    throw StructuralError("shear circuit left work registers dirty");
  }
  return out;
}

}  // namespace qshear
