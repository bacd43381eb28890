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

// NEQR model of a 2^n x 2^n grayscale image: the uniform superposition of
// basis terms |f(y,x)>|y x> with an 8-bit color register and n-bit row and
// column registers. Every operation in this library permutes basis terms, so
// the image is stored as its term table and the 1/2^n amplitude is implicit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qshear {

/// Plain row-major raster of gray values. encode() rejects values outside
/// [0, 255].
struct Raster {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> values;

  Raster() = default;
  Raster(std::size_t r, std::size_t c, int fill = 0)
      : rows(r), cols(c), values(r * c, fill) {}

  int& at(std::size_t y, std::size_t x) { return values[y * cols + x]; }
  int at(std::size_t y, std::size_t x) const { return values[y * cols + x]; }

  friend bool operator==(const Raster&, const Raster&) = default;
};

struct PixelTerm {
  std::uint32_t y = 0;
  std::uint32_t x = 0;
  std::uint8_t color = 0;

  friend bool operator==(const PixelTerm&, const PixelTerm&) = default;
};

class NEQRImage {
 public:
  NEQRImage() : NEQRImage(0) {}
  /// All-black image of side 2^n.
  explicit NEQRImage(unsigned n);

  unsigned n() const { return n_; }
  std::size_t side() const { return std::size_t{1} << n_; }
  /// Qubits in the position register |y x>.
  unsigned position_qubits() const { return 2 * n_; }
  static constexpr unsigned kColorQubits = 8;

  std::uint8_t color(std::size_t y, std::size_t x) const {
    return pixels_[y * side() + x];
  }
  void set_color(std::size_t y, std::size_t x, std::uint8_t c) {
    pixels_[y * side() + x] = c;
  }
  std::span<const std::uint8_t> pixels() const { return pixels_; }

  /// All 4^n basis terms in row-major order.
  std::vector<PixelTerm> terms() const;

  /// Image whose listed terms carry their colors and every other position is
  /// background 0. Throws RangeError if a term lies outside the frame.
  static NEQRImage from_terms(unsigned n, std::span<const PixelTerm> terms);

  friend bool operator==(const NEQRImage&, const NEQRImage&) = default;

 private:
  unsigned n_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// Side must be a power of two and square (FormatError); values in [0, 255]
/// (RangeError).
NEQRImage encode(const Raster& raster);

Raster decode(const NEQRImage& image);

/// log2 of a power-of-two side; throws FormatError otherwise.
unsigned side_exponent(std::size_t side);

}  // namespace qshear
