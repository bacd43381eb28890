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

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "qshear/neqr.hpp"

namespace qshear {

enum class PgmFormat { kAscii /* P2 */, kBinary /* P5 */ };

/// Reads a P2 or P5 graymap. Only maxval 255 is accepted. Throws FormatError.
Raster read_pgm(std::istream& in);
Raster read_pgm_file(const std::filesystem::path& path);

/// Throws RangeError for values outside [0, 255].
void write_pgm(std::ostream& out, const Raster& raster, PgmFormat format);

/// Writes to a temporary sibling and renames it into place. Throws IoError.
void write_pgm_file(const std::filesystem::path& path, const Raster& raster,
                    PgmFormat format);

}  // namespace qshear
