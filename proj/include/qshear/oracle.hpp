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

// Netlist-free reference for the shear rotation, written straight from the
// shear equations over rasters, plus a real-valued rotator used only for an
// informational quality metric.

#include <cstdint>
#include <optional>
#include <utility>

#include "qshear/neqr.hpp"
#include "qshear/shear.hpp"

namespace qshear::oracle {

/// Fixed configuration: 4 fraction bits, round half up, clip to the frame.
struct OracleConfig {
  static constexpr unsigned kFractionBits = 4;
};

/// Shifts every row (horizontal) or column (vertical) rigidly by the rounded
/// displacement of its distance from the median line. `factor` is signed.
/// The raster side must be a power of two.
Raster oracle_shear(const Raster& raster, ShearAxis axis, double factor);

/// Horizontal tan(theta/2), vertical sin(theta), horizontal tan(theta/2).
/// Throws UnsupportedAngleError unless |degrees| < 90.
Raster oracle_rotate(const Raster& raster, double degrees);

/// Follows one position through oracle_rotate's three shears; nullopt if it is
/// clipped on the way.
std::optional<std::pair<std::int64_t, std::int64_t>> oracle_map_point(
    std::size_t side, std::int64_t y, std::int64_t x, double degrees);

/// Inverse-mapping rotation with nearest-neighbour sampling about the median
/// pixel, black outside the source.
Raster ideal_rotate(const Raster& raster, double degrees);

/// Fraction of positions where two equally sized rasters agree.
double agreement_fraction(const Raster& a, const Raster& b);

}  // namespace qshear::oracle
