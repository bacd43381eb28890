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

#include "qshear/patterns.hpp"

#include <random>

namespace qshear {

Raster make_checkerboard(std::size_t side, std::size_t cell) {
  Raster r(side, side);
  if (cell == 0) cell = 1;
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < side; ++x) {
      r.at(y, x) = ((y / cell + x / cell) % 2) ? 255 : 0;
    }
  }
  return r;
}

Raster make_gradient(std::size_t side) {
  Raster r(side, side);
  const std::size_t span = side > 1 ? 2 * (side - 1) : 1;
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < side; ++x) {
      r.at(y, x) = static_cast<int>((x + y) * 255 / span);
    }
  }
  return r;
}

Raster make_random(std::size_t side, std::uint64_t seed) {
  Raster r(side, side);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  for (auto& v : r.values) v = dist(rng);
  return r;
}

}  // namespace qshear
