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

#include "qshear/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qshear/error.hpp"

namespace qshear::oracle {

namespace {

void check_angle(double degrees) {
  if (!(std::abs(degrees) < 90.0)) {
    throw UnsupportedAngleError("rotation angle " + std::to_string(degrees) +
                                " outside (-90, 90) degrees");
  }
}

std::int64_t center_of(std::size_t side) {
  return static_cast<std::int64_t>(side / 2);
}

// Shift of a line at signed distance `dist` from the median under a signed
// factor: round-half-up of |dist| * |q| with q in sixteenths, then re-signed.
std::int64_t line_shift(std::int64_t dist, double factor) {
  const auto q16 =
      static_cast<std::int64_t>(std::floor(std::abs(factor) * 16.0 + 0.5));
  const std::int64_t mag = (std::abs(dist) * q16 + 8) / 16;
  const std::int64_t s = (dist < 0 ? -1 : 1) * (factor < 0 ? -1 : 1);
  return s * mag;
}

// x_s = x + (y - c) * f ;  y_s = y - (x - c) * f
std::int64_t horizontal_shift(std::int64_t y, std::int64_t c, double f) {
  return line_shift(y - c, f);
}
std::int64_t vertical_shift(std::int64_t x, std::int64_t c, double f) {
  return -line_shift(x - c, f);
}

}  // namespace

Raster oracle_shear(const Raster& raster, ShearAxis axis, double factor) {
  if (raster.rows != raster.cols) throw FormatError("oracle needs a square raster");
  (void)side_exponent(raster.rows);
  const auto side = static_cast<std::int64_t>(raster.rows);
  const std::int64_t c = center_of(raster.rows);
  Raster out(raster.rows, raster.cols, 0);
  if (side == 1) return raster;
  for (std::int64_t y = 0; y < side; ++y) {
    for (std::int64_t x = 0; x < side; ++x) {
      std::int64_t ty = y, tx = x;
      if (axis == ShearAxis::kHorizontal) {
        tx += horizontal_shift(y, c, factor);
      } else {
        ty += vertical_shift(x, c, factor);
      }
      if (ty >= 0 && ty < side && tx >= 0 && tx < side) {
        out.at(static_cast<std::size_t>(ty), static_cast<std::size_t>(tx)) =
            raster.at(static_cast<std::size_t>(y), static_cast<std::size_t>(x));
      }
    }
  }
  return out;
}

Raster oracle_rotate(const Raster& raster, double degrees) {
  check_angle(degrees);
  const double t = degrees * std::numbers::pi / 180.0;
  const double h = std::tan(t / 2);
  const double v = std::sin(t);
  return oracle_shear(oracle_shear(oracle_shear(raster, ShearAxis::kHorizontal, h),
                                   ShearAxis::kVertical, v),
                      ShearAxis::kHorizontal, h);
}

std::optional<std::pair<std::int64_t, std::int64_t>> oracle_map_point(
    std::size_t side, std::int64_t y, std::int64_t x, double degrees) {
  check_angle(degrees);
  const double t = degrees * std::numbers::pi / 180.0;
  const double h = std::tan(t / 2);
  const double v = std::sin(t);
  const std::int64_t c = center_of(side);
  const auto s = static_cast<std::int64_t>(side);
  auto inside = [&] { return y >= 0 && y < s && x >= 0 && x < s; };
  if (side == 1) return std::pair{y, x};
  x += horizontal_shift(y, c, h);
  if (!inside()) return std::nullopt;
  y += vertical_shift(x, c, v);
  if (!inside()) return std::nullopt;
  x += horizontal_shift(y, c, h);
  if (!inside()) return std::nullopt;
  return std::pair{y, x};
}

Raster ideal_rotate(const Raster& raster, double degrees) {
  check_angle(degrees);
  const double t = degrees * std::numbers::pi / 180.0;
  const double cs = std::cos(t);
  const double sn = std::sin(t);
  const auto c = static_cast<double>(center_of(raster.rows));
  Raster out(raster.rows, raster.cols, 0);
  if (raster.rows == 1) return raster;
  for (std::size_t y = 0; y < raster.rows; ++y) {
    for (std::size_t x = 0; x < raster.cols; ++x) {
      const double dx = static_cast<double>(x) - c;
      const double dy = static_cast<double>(y) - c;
      // Forward map: x' = c + dx cos + dy sin, y' = c - dx sin + dy cos.
      const double sx = c + dx * cs - dy * sn;
      const double sy = c + dx * sn + dy * cs;
      const auto ix = static_cast<std::int64_t>(std::floor(sx + 0.5));
      const auto iy = static_cast<std::int64_t>(std::floor(sy + 0.5));
      if (ix >= 0 && iy >= 0 && ix < static_cast<std::int64_t>(raster.cols) &&
          iy < static_cast<std::int64_t>(raster.rows)) {
        out.at(y, x) = raster.at(static_cast<std::size_t>(iy),
                                 static_cast<std::size_t>(ix));
      }
    }
  }
  return out;
}

double agreement_fraction(const Raster& a, const Raster& b) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw ParameterError("agreement_fraction needs equally sized rasters");
  }
  if (a.values.empty()) return 1.0;
  std::size_t same = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) same += a.values[i] == b.values[i];
  return static_cast<double>(same) / static_cast<double>(a.values.size());
}

}  // namespace qshear::oracle
