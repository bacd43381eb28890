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

// Centroid shears on NEQR images and the three-phase rotation built from them.
//
// The image is split at the median line mid = 2^(n-1). A horizontal shear
// moves x by a displacement that depends only on y; a vertical shear moves y
// by one that depends only on x:
//
//   top    (y <  mid)  x_s = x - round((mid - y) * q)
//   bottom (y >= mid)  x_s = x + round((y - mid) * q)
//   left   (x <  mid)  y_s = y + round((mid - x) * q)
//   right  (x >= mid)  y_s = y - round((x - mid) * q)
//
// q is the shear factor quantized to 4 fraction bits; its sign is carried
// separately and flips each direction. round() is round-half-up on the
// non-negative product, i.e. the interpolation circuit.
//
// Two execution modes give bit-identical images: kSemantic evaluates the
// formulas above, kNetlist runs the gate-level circuit per pixel term.

#include <array>
#include <cstdint>

#include "qshear/neqr.hpp"
#include "qshear/reversible.hpp"

namespace qshear {

enum class ShearAxis : std::uint8_t { kHorizontal, kVertical };

/// Which side of the median line: kLow is top (horizontal) or left (vertical).
enum class Half : std::uint8_t { kLow, kHigh };

/// Shear factor rounded to a multiple of 1/16, ties away from zero.
struct QuantizedFactor {
  std::uint32_t sixteenths = 0;  // |q| * 16
  bool negative = false;
  double true_value = 0.0;

  double value() const {
    return (negative ? -1.0 : 1.0) * static_cast<double>(sixteenths) / 16.0;
  }
  friend bool operator==(const QuantizedFactor&, const QuantizedFactor&) = default;
};

QuantizedFactor quantize_factor(double value);

/// Default width of the factor register: 1 integer bit + 4 fraction bits.
inline constexpr unsigned kDefaultFactorBits = 5;

struct ShearSpec {
  ShearAxis axis = ShearAxis::kHorizontal;
  QuantizedFactor factor;
  unsigned n = 0;  // image side exponent
  unsigned factor_bits = kDefaultFactorBits;

  std::uint32_t median() const { return n == 0 ? 0 : std::uint32_t{1} << (n - 1); }

  static ShearSpec with_factor(ShearAxis axis, unsigned n, double factor);
  /// Horizontal phase of a rotation by `degrees`: factor tan(theta / 2).
  static ShearSpec horizontal_for_angle(unsigned n, double degrees);
  /// Vertical phase of a rotation by `degrees`: factor sin(theta).
  static ShearSpec vertical_for_angle(unsigned n, double degrees);
};

/// Pixel term after a shear; the moved coordinate may leave the frame.
struct ShearedTerm {
  std::int64_t y = 0;
  std::int64_t x = 0;
  std::uint8_t color = 0;

  friend bool operator==(const ShearedTerm&, const ShearedTerm&) = default;
};

/// Half that owns `term` under `spec` (by y for horizontal, x for vertical).
Half half_of(const PixelTerm& term, const ShearSpec& spec);

/// Signed displacement applied to the moved coordinate of a term whose
/// driving coordinate (y for horizontal, x for vertical) is `driver`.
std::int64_t displacement(const ShearSpec& spec, std::uint32_t driver);

// Per-half shears. Each throws RoutingError if the term belongs to the other
// half and ParameterError if the spec axis does not match.
ShearedTerm shear_top_half(const PixelTerm& term, const ShearSpec& spec);
ShearedTerm shear_bottom_half(const PixelTerm& term, const ShearSpec& spec);
ShearedTerm shear_left_half(const PixelTerm& term, const ShearSpec& spec);
ShearedTerm shear_right_half(const PixelTerm& term, const ShearSpec& spec);

/// Dispatches to the half-shear that owns the term.
ShearedTerm shear_term(const PixelTerm& term, const ShearSpec& spec);

enum class ExecutionMode : std::uint8_t { kSemantic, kNetlist };
enum class HalfOrder : std::uint8_t { kLowFirst, kHighFirst };
enum class Canvas : std::uint8_t { kClip, kExpand };

/// Largest side exponent accepted in netlist mode (64 x 64).
inline constexpr unsigned kMaxNetlistExponent = 6;

struct ShearOptions {
  ExecutionMode mode = ExecutionMode::kSemantic;
  HalfOrder order = HalfOrder::kLowFirst;
};

/// Shears every term; terms leaving [0, 2^n) are dropped and vacated
/// positions are 0.
NEQRImage apply_shear(const NEQRImage& image, const ShearSpec& spec,
                      const ShearOptions& options = {});

struct RotationOptions {
  ExecutionMode mode = ExecutionMode::kSemantic;
  HalfOrder order = HalfOrder::kLowFirst;
  Canvas canvas = Canvas::kClip;
  unsigned factor_bits = kDefaultFactorBits;
};

/// The three phase shears of a rotation: horizontal tan(theta/2), vertical
/// sin(theta), horizontal tan(theta/2). Throws UnsupportedAngleError unless
/// |degrees| < 90.
std::array<ShearSpec, 3> rotation_phases(unsigned n, double degrees,
                                         unsigned factor_bits = kDefaultFactorBits);

struct RotationResult {
  NEQRImage phase1;  // after the first horizontal shear
  NEQRImage phase2;  // after the vertical shear
  NEQRImage final_image;
};

/// Counter-clockwise for positive degrees, about the median pixel
/// (2^(n-1), 2^(n-1)). With Canvas::kExpand the image is first embedded in a
/// 2^(n+2) canvas (see embed_centered) and all three outputs have that size.
RotationResult rotate(const NEQRImage& image, double degrees,
                      const RotationOptions& options = {});

/// Places the image on a 2^(n + extra_bits) black canvas so that its median
/// pixel lands on the canvas median pixel.
NEQRImage embed_centered(const NEQRImage& image, unsigned extra_bits = 2);

/// Exact counter-clockwise rotation by quarter_turns * 90 degrees about the
/// geometric image center (a pure coordinate permutation).
NEQRImage rotate_quarter_turns(const NEQRImage& image, int quarter_turns);

// Gate-level realization ------------------------------------------------------

/// Circuit for one half-shear on registers x[n+1], y[n+1], mid[n+1],
/// factor[m] plus scratch (grouped in register "ancillae"):
///   dispatch: c <- MSB of the driving coordinate (control-on-0 for kLow)
///   step 1  : offset = mid - driver (kLow, into mid) or driver - mid (kHigh,
///             in place on the driver)
///   step 2  : product = c * factor * offset         (Ctrl-MULTI, n stages)
///   step 3  : disp = round(product)                 (interpolation, width n)
///   step 4  : moved +/- disp                        (adder or subtractor)
///   then steps 3..1 run backwards and c is cleared.
/// The moved coordinate register holds the result modulo 2^(n+1); see
/// decode_coordinate. Requires n >= 1 and m >= 4.
Netlist build_half_shear(ShearAxis axis, Half half, unsigned n, unsigned m,
                         bool negative_factor);

/// Both half circuits on shared registers, in the given order.
Netlist build_full_shear(ShearAxis axis, unsigned n, unsigned m,
                         bool negative_factor,
                         HalfOrder order = HalfOrder::kLowFirst);

/// Appends one half-shear to `nl` over existing registers.
void emit_half_shear(Netlist& nl, const std::string& prefix, ShearAxis axis,
                     Half half, bool negative_factor, const Register& x,
                     const Register& y, const Register& mid,
                     const Register& factor);

/// Maps an (n+1)-bit register value to the sheared coordinate. Reachable
/// coordinates span [-2^(n-1), 3 * 2^(n-1)), exactly 2^(n+1) values.
std::int64_t decode_coordinate(std::uint64_t reg_value, unsigned n);

/// Runs a build_full_shear / build_half_shear netlist on one term.
ShearedTerm run_shear_netlist(const Netlist& netlist, const ShearSpec& spec,
                              const PixelTerm& term);

}  // namespace qshear
