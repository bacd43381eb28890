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

#include <cstdint>

#include "qshear/neqr.hpp"

namespace qshear {

/// Alternating 0/255 squares of `cell` pixels.
Raster make_checkerboard(std::size_t side, std::size_t cell = 4);

/// Diagonal ramp (x + y) scaled into [0, 255].
Raster make_gradient(std::size_t side);

/// Uniform random gray values from a fixed-seed generator.
Raster make_random(std::size_t side, std::uint64_t seed = 0x5eed);

}  // namespace qshear
