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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "qshear/error.hpp"
#include "qshear/patterns.hpp"
#include "qshear/shear.hpp"

namespace qshear {
namespace {

constexpr double kFactors[] = {0.0, 0.25, -0.25, 0.5, -0.8125, 1.0, -1.0, 0.6875};

NEQRImage random_image(unsigned n, std::uint64_t seed) {
  return encode(make_random(std::size_t{1} << n, seed));
}

TEST(Quantize, RoundsToSixteenths) {
  EXPECT_EQ(quantize_factor(1.0).sixteenths, 16U);
  EXPECT_EQ(quantize_factor(0.2679).sixteenths, 4U);
  EXPECT_EQ(quantize_factor(0.5).sixteenths, 8U);
  EXPECT_EQ(quantize_factor(0.03125).sixteenths, 1U);
  EXPECT_EQ(quantize_factor(0.03).sixteenths, 0U);
  const auto neg = quantize_factor(-0.7071);
  EXPECT_EQ(neg.sixteenths, 11U);
  EXPECT_TRUE(neg.negative);
  EXPECT_DOUBLE_EQ(neg.value(), -0.6875);
}

TEST(Displacement, FourByFourAtFactorOne) {
  const auto spec = ShearSpec::with_factor(ShearAxis::kHorizontal, 2, 1.0);
  EXPECT_EQ(spec.median(), 2U);
  EXPECT_EQ(displacement(spec, 0), -2);
  EXPECT_EQ(displacement(spec, 1), -1);
  EXPECT_EQ(displacement(spec, 2), 0);
  EXPECT_EQ(displacement(spec, 3), 1);
}

TEST(Displacement, EightByEightAtThirtyDegrees) {
  const auto h = ShearSpec::horizontal_for_angle(3, 30.0);
  EXPECT_EQ(h.factor.sixteenths, 4U);
  EXPECT_EQ(displacement(h, 0), -1);
  EXPECT_EQ(displacement(h, 2), -1);
  EXPECT_EQ(displacement(h, 3), 0);
  EXPECT_EQ(displacement(h, 6), 1);
  const auto v = ShearSpec::vertical_for_angle(3, 30.0);
  EXPECT_EQ(v.factor.sixteenths, 8U);
  EXPECT_EQ(displacement(v, 0), 2);
  EXPECT_EQ(displacement(v, 1), 2);
  EXPECT_EQ(displacement(v, 4), 0);
  EXPECT_EQ(displacement(v, 7), -2);
}

TEST(HalfShears, RoutingAndAxisChecks) {
  const auto h = ShearSpec::with_factor(ShearAxis::kHorizontal, 2, 1.0);
  const auto v = ShearSpec::with_factor(ShearAxis::kVertical, 2, 1.0);
  const PixelTerm top{0, 1, 7};
  const PixelTerm bottom{3, 1, 7};
  EXPECT_EQ(shear_top_half(top, h), (ShearedTerm{0, -1, 7}));
  EXPECT_EQ(shear_bottom_half(bottom, h), (ShearedTerm{3, 2, 7}));
  EXPECT_THROW(shear_top_half(bottom, h), RoutingError);
  EXPECT_THROW(shear_bottom_half(top, h), RoutingError);
  EXPECT_THROW(shear_top_half(top, v), ParameterError);
  EXPECT_EQ(shear_left_half({1, 0, 9}, v), (ShearedTerm{3, 0, 9}));
  EXPECT_EQ(shear_right_half({1, 3, 9}, v), (ShearedTerm{0, 3, 9}));
  EXPECT_THROW(shear_left_half({1, 3, 9}, v), RoutingError);
  EXPECT_THROW(shear_right_half({1, 0, 9}, h), ParameterError);
}

TEST(HalfShears, NegativeFactorFlipsDirection) {
  const auto pos = ShearSpec::with_factor(ShearAxis::kVertical, 3, 0.5);
  const auto neg = ShearSpec::with_factor(ShearAxis::kVertical, 3, -0.5);
  for (std::uint32_t x = 0; x < 8; ++x) {
    EXPECT_EQ(displacement(neg, x), -displacement(pos, x));
  }
}

TEST(Properties, RigidLineShift) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> fpick(-16, 16);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 1 + trial % 5;
    const auto axis = trial % 2 ? ShearAxis::kVertical : ShearAxis::kHorizontal;
    const auto spec = ShearSpec::with_factor(axis, n, fpick(rng) / 16.0);
    const NEQRImage img = random_image(n, trial);
    std::map<std::uint32_t, std::set<std::int64_t>> shifts;
    for (const auto& t : img.terms()) {
      const auto s = shear_term(t, spec);
      if (axis == ShearAxis::kHorizontal) {
        EXPECT_EQ(s.y, t.y);
        shifts[t.y].insert(s.x - t.x);
      } else {
        EXPECT_EQ(s.x, t.x);
        shifts[t.x].insert(s.y - t.y);
      }
      EXPECT_EQ(s.color, t.color);
    }
    for (const auto& [line, set] : shifts) EXPECT_EQ(set.size(), 1U) << line;
  }
}

TEST(Properties, InjectiveBeforeClipping) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> fpick(-16, 16);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 1 + trial % 5;
    const auto axis = trial % 2 ? ShearAxis::kVertical : ShearAxis::kHorizontal;
    const auto spec = ShearSpec::with_factor(axis, n, fpick(rng) / 16.0);
    const NEQRImage img(n);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& t : img.terms()) {
      const auto s = shear_term(t, spec);
      EXPECT_TRUE(seen.insert({s.y, s.x}).second);
    }
  }
}

TEST(Properties, AntiSymmetricAboutMedian) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (double f : kFactors) {
      const auto spec = ShearSpec::with_factor(ShearAxis::kHorizontal, n, f);
      const auto mid = spec.median();
      for (std::uint32_t k = 1; k < mid; ++k) {
        EXPECT_EQ(displacement(spec, mid - k), -displacement(spec, mid + k));
      }
    }
  }
}

TEST(Properties, ThetaZeroIsIdentity) {
  for (unsigned n = 0; n <= 5; ++n) {
    const NEQRImage img = random_image(n, 100 + n);
    EXPECT_EQ(rotate(img, 0.0).final_image, img);
    RotationOptions opts;
    opts.mode = ExecutionMode::kNetlist;
    EXPECT_EQ(rotate(img, 0.0, opts).final_image, img);
  }
}

TEST(Properties, LineMultisetPreservedUpToClipping) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> fpick(-16, 16);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 2 + trial % 4;
    const std::size_t side = std::size_t{1} << n;
    const auto axis = trial % 2 ? ShearAxis::kVertical : ShearAxis::kHorizontal;
    const auto spec = ShearSpec::with_factor(axis, n, fpick(rng) / 16.0);
    const NEQRImage img = random_image(n, 500 + trial);
    const NEQRImage out = apply_shear(img, spec);
    for (std::size_t line = 0; line < side; ++line) {
      std::multiset<int> kept, got;
      for (std::size_t i = 0; i < side; ++i) {
        const std::size_t y = axis == ShearAxis::kHorizontal ? line : i;
        const std::size_t x = axis == ShearAxis::kHorizontal ? i : line;
        got.insert(out.color(y, x));
        const auto s = shear_term({static_cast<std::uint32_t>(y),
                                   static_cast<std::uint32_t>(x), img.color(y, x)},
                                  spec);
        const auto moved = axis == ShearAxis::kHorizontal ? s.x : s.y;
        if (moved >= 0 && moved < static_cast<std::int64_t>(side)) {
          kept.insert(img.color(y, x));
        }
      }
      const auto vacated = side - kept.size();
      for (std::size_t k = 0; k < vacated; ++k) kept.insert(0);
      EXPECT_EQ(got, kept) << "line " << line;
    }
  }
}

TEST(Netlist, HalfShearMatchesSemanticExhaustively) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (auto axis : {ShearAxis::kHorizontal, ShearAxis::kVertical}) {
      for (double f : kFactors) {
        const auto spec = ShearSpec::with_factor(axis, n, f);
        for (auto order : {HalfOrder::kLowFirst, HalfOrder::kHighFirst}) {
          const Netlist nl = build_full_shear(axis, n, spec.factor_bits,
                                              spec.factor.negative, order);
          for (const auto& t : NEQRImage(n).terms()) {
            EXPECT_EQ(run_shear_netlist(nl, spec, t), shear_term(t, spec))
                << "n=" << n << " f=" << f << " y=" << t.y << " x=" << t.x;
          }
        }
      }
    }
  }
}

TEST(Netlist, SingleHalfLeavesOtherHalfUntouched) {
  const auto spec = ShearSpec::with_factor(ShearAxis::kHorizontal, 3, 0.75);
  const Netlist top = build_half_shear(ShearAxis::kHorizontal, Half::kLow, 3,
                                       spec.factor_bits, false);
  for (const auto& t : NEQRImage(3).terms()) {
    const auto s = run_shear_netlist(top, spec, t);
    if (half_of(t, spec) == Half::kLow) {
      EXPECT_EQ(s, shear_top_half(t, spec));
    } else {
      EXPECT_EQ(s, (ShearedTerm{t.y, t.x, t.color}));
    }
  }
}

TEST(Netlist, OrderIndependence) {
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 1 + trial % 3;
    const auto axis = trial % 2 ? ShearAxis::kVertical : ShearAxis::kHorizontal;
    const double f = kFactors[trial % std::size(kFactors)];
    const auto spec = ShearSpec::with_factor(axis, n, f);
    const NEQRImage img = random_image(n, 900 + trial);
    const auto a = apply_shear(img, spec, {ExecutionMode::kNetlist, HalfOrder::kLowFirst});
    const auto b = apply_shear(img, spec, {ExecutionMode::kNetlist, HalfOrder::kHighFirst});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, apply_shear(img, spec));
  }
}

TEST(Netlist, NetlistModeRejectsLargeImages) {
  RotationOptions opts;
  opts.mode = ExecutionMode::kNetlist;
  EXPECT_THROW(rotate(NEQRImage(7), 30.0, opts), ParameterError);
}

TEST(Netlist, DecodeCoordinateWindow) {
  EXPECT_EQ(decode_coordinate(0, 3), 0);
  EXPECT_EQ(decode_coordinate(11, 3), 11);
  EXPECT_EQ(decode_coordinate(12, 3), -4);
  EXPECT_EQ(decode_coordinate(15, 3), -1);
}

TEST(Rotation, RejectsRightAngles) {
  const NEQRImage img(3);
  EXPECT_THROW(rotate(img, 90.0), UnsupportedAngleError);
  EXPECT_THROW(rotate(img, -90.0), UnsupportedAngleError);
  EXPECT_THROW(rotate(img, 135.0), UnsupportedAngleError);
}

TEST(Rotation, CenterDotStaysPut) {
  Raster r(16, 16, 0);
  r.at(8, 8) = 200;
  for (double deg : {30.0, 45.0, 60.0, -30.0, 89.0}) {
    const Raster out = decode(rotate(encode(r), deg).final_image);
    EXPECT_EQ(out.at(8, 8), 200) << deg;
    EXPECT_EQ(std::count(out.values.begin(), out.values.end(), 200), 1) << deg;
  }
}

TEST(Rotation, ExpandCanvasKeepsEveryPixel) {
  const NEQRImage img = encode(make_random(16, 3));
  RotationOptions opts;
  opts.canvas = Canvas::kExpand;
  const auto r = rotate(img, 45.0, opts);
  EXPECT_EQ(r.final_image.side(), 64U);
  std::vector<int> before(img.pixels().begin(), img.pixels().end());
  std::vector<int> after;
  for (auto c : r.final_image.pixels()) after.push_back(c);
  const auto nonzero = [](const std::vector<int>& v) {
    return std::count_if(v.begin(), v.end(), [](int c) { return c != 0; });
  };
  EXPECT_EQ(nonzero(after), nonzero(before));
}

TEST(Rotation, EmbedCenteredAlignsMedians) {
  Raster r(4, 4, 0);
  r.at(2, 2) = 9;
  const NEQRImage big = embed_centered(encode(r));
  EXPECT_EQ(big.side(), 16U);
  EXPECT_EQ(big.color(8, 8), 9);
}

TEST(Rotation, QuarterTurns) {
  Raster r(2, 2, 0);
  r.at(0, 0) = 1;
  r.at(0, 1) = 2;
  r.at(1, 0) = 3;
  r.at(1, 1) = 4;
  const Raster ccw = decode(rotate_quarter_turns(encode(r), 1));
  EXPECT_EQ(ccw.values, (std::vector<int>{2, 4, 1, 3}));
  const Raster half = decode(rotate_quarter_turns(encode(r), 2));
  EXPECT_EQ(half.values, (std::vector<int>{4, 3, 2, 1}));
  const NEQRImage img = random_image(3, 1);
  EXPECT_EQ(rotate_quarter_turns(img, 4), img);
  EXPECT_EQ(rotate_quarter_turns(rotate_quarter_turns(img, 1), -1), img);
}

}  // namespace
}  // namespace qshear
