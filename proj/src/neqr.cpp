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

#include "qshear/neqr.hpp"

#include <bit>
#include <string>

#include "qshear/error.hpp"

namespace qshear {

NEQRImage::NEQRImage(unsigned n) : n_(n) {
  if (n > 15) throw ParameterError("image side exponent too large");
  pixels_.assign(side() * side(), 0);
}

std::vector<PixelTerm> NEQRImage::terms() const {
  std::vector<PixelTerm> out;
  out.reserve(pixels_.size());
  const std::size_t s = side();
  for (std::size_t y = 0; y < s; ++y) {
    for (std::size_t x = 0; x < s; ++x) {
      out.push_back({static_cast<std::uint32_t>(y),
                     static_cast<std::uint32_t>(x), color(y, x)});
    }
  }
  return out;
}

NEQRImage NEQRImage::from_terms(unsigned n, std::span<const PixelTerm> terms) {
  NEQRImage img(n);
  for (const PixelTerm& t : terms) {
    if (t.y >= img.side() || t.x >= img.side()) {
      throw RangeError("pixel term (" + std::to_string(t.y) + ", " +
                       std::to_string(t.x) + ") outside " +
                       std::to_string(img.side()) + "x" +
                       std::to_string(img.side()) + " frame");
    }
    img.set_color(t.y, t.x, t.color);
  }
  return img;
}

unsigned side_exponent(std::size_t side) {
  if (side == 0 || !std::has_single_bit(side)) {
    throw FormatError("image side " + std::to_string(side) +
                      " is not a power of two");
  }
  return static_cast<unsigned>(std::countr_zero(side));
}

NEQRImage encode(const Raster& raster) {
  if (raster.rows != raster.cols) {
    throw FormatError("image is " + std::to_string(raster.cols) + "x" +
                      std::to_string(raster.rows) + ", not square");
  }
  if (raster.values.size() != raster.rows * raster.cols) {
    throw FormatError("raster value count does not match its dimensions");
  }
  NEQRImage img(side_exponent(raster.rows));
  for (std::size_t y = 0; y < raster.rows; ++y) {
    for (std::size_t x = 0; x < raster.cols; ++x) {
      const int v = raster.at(y, x);
      if (v < 0 || v > 255) {
        throw RangeError("pixel (" + std::to_string(y) + ", " +
                         std::to_string(x) + ") = " + std::to_string(v) +
                         " outside [0, 255]");
      }
      img.set_color(y, x, static_cast<std::uint8_t>(v));
    }
  }
  return img;
}

Raster decode(const NEQRImage& image) {
  Raster r(image.side(), image.side());
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = image.pixels()[i];
  return r;
}

}  // namespace qshear
