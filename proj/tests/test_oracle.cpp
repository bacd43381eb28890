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

#include <cmath>
#include <numbers>

#include "qshear/error.hpp"
#include "qshear/oracle.hpp"
#include "qshear/patterns.hpp"

namespace qshear {
namespace {

TEST(Oracle, ShearFourByFourFactorOne) {
  Raster r(4, 4, 0);
  for (std::size_t y = 0; y < 4; ++y) r.at(y, 2) = static_cast<int>(10 + y);
  const Raster out = oracle::oracle_shear(r, ShearAxis::kHorizontal, 1.0);
  EXPECT_EQ(out.at(0, 0), 10);
  EXPECT_EQ(out.at(1, 1), 11);
  EXPECT_EQ(out.at(2, 2), 12);
  EXPECT_EQ(out.at(3, 3), 13);
}

TEST(Oracle, MatchesShearEngineBitForBit) {
  for (std::size_t side : {2, 4, 8, 16, 32}) {
    for (double deg : {5.0, 30.0, 45.0, 60.0, -30.0, -75.0, 89.5}) {
      for (const Raster& r : {make_random(side, side), make_checkerboard(side, 2),
                              make_gradient(side)}) {
        EXPECT_EQ(decode(rotate(encode(r), deg).final_image),
                  oracle::oracle_rotate(r, deg))
            << side << " " << deg;
      }
    }
  }
}

TEST(Oracle, SingleShearsMatchEngine) {
  const Raster r = make_random(16, 77);
  for (auto axis : {ShearAxis::kHorizontal, ShearAxis::kVertical}) {
    for (double f : {0.3, -0.55, 1.0, -1.0}) {
      const auto spec = ShearSpec::with_factor(axis, 4, f);
      EXPECT_EQ(decode(apply_shear(encode(r), spec)),
                oracle::oracle_shear(r, axis, f));
    }
  }
}

TEST(Oracle, MapPointTracksRotate) {
  const std::size_t side = 16;
  Raster r(side, side, 0);
  r.at(3, 11) = 255;
  const Raster out = oracle::oracle_rotate(r, 30.0);
  const auto p = oracle::oracle_map_point(side, 3, 11, 30.0);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(out.at(static_cast<std::size_t>(p->first),
                   static_cast<std::size_t>(p->second)),
            255);
}

TEST(Oracle, MeanPositionErrorAgainstExactRotation) {
  const std::size_t side = 64;
  const double c = static_cast<double>(side / 2);
  for (double deg : {30.0, -30.0}) {
    const double t = deg * std::numbers::pi / 180.0;
    double total = 0.0;
    std::size_t count = 0;
    for (std::int64_t y = 0; y < static_cast<std::int64_t>(side); ++y) {
      for (std::int64_t x = 0; x < static_cast<std::int64_t>(side); ++x) {
        const auto p = oracle::oracle_map_point(side, y, x, deg);
        if (!p) continue;
        const double dx = static_cast<double>(x) - c;
        const double dy = static_cast<double>(y) - c;
        const double ex = c + dx * std::cos(t) + dy * std::sin(t);
        const double ey = c - dx * std::sin(t) + dy * std::cos(t);
        total += std::hypot(static_cast<double>(p->second) - ex,
                            static_cast<double>(p->first) - ey);
        ++count;
      }
    }
    ASSERT_GT(count, side * side / 2);
    EXPECT_LE(total / static_cast<double>(count), 2.0) << deg;
  }
}

TEST(Oracle, IdealRotateKeepsCenterAndAgreementIsHigh) {
  Raster dot(16, 16, 0);
  dot.at(8, 8) = 50;
  EXPECT_EQ(oracle::ideal_rotate(dot, 45.0).at(8, 8), 50);
  const Raster board = make_checkerboard(64, 8);
  const double agree = oracle::agreement_fraction(
      decode(rotate(encode(board), 45.0).final_image),
      oracle::ideal_rotate(board, 45.0));
  EXPECT_GT(agree, 0.5);
  EXPECT_LE(agree, 1.0);
}

TEST(Oracle, Errors) {
  EXPECT_THROW(oracle::oracle_rotate(Raster(4, 4), 90.0), UnsupportedAngleError);
  EXPECT_THROW(oracle::oracle_shear(Raster(4, 3), ShearAxis::kVertical, 0.5),
               FormatError);
  EXPECT_THROW(oracle::oracle_shear(Raster(6, 6), ShearAxis::kVertical, 0.5),
               FormatError);
  EXPECT_THROW(oracle::agreement_fraction(Raster(2, 2), Raster(4, 4)),
               ParameterError);
}

}  // namespace
}  // namespace qshear
