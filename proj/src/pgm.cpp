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

#include "qshear/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <system_error>

#include "qshear/error.hpp"

namespace qshear {

namespace {

void skip_space_and_comments(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    } else if (c != EOF && std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

long read_header_int(std::istream& in, const char* what) {
  skip_space_and_comments(in);
  long v = -1;
  if (!(in >> v) || v < 0) {
    throw FormatError(std::string("PGM: bad or missing ") + what);
  }
  return v;
}

}  // namespace

Raster read_pgm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5')) {
    throw FormatError("PGM: expected magic P2 or P5");
  }
  const bool binary = magic[1] == '5';
  const long width = read_header_int(in, "width");
  const long height = read_header_int(in, "height");
  const long maxval = read_header_int(in, "maxval");
  if (width == 0 || height == 0) throw FormatError("PGM: empty image");
  if (maxval != 255) {
    throw FormatError("PGM: maxval must be 255, got " + std::to_string(maxval));
  }

  Raster r(static_cast<std::size_t>(height), static_cast<std::size_t>(width));
  if (binary) {
    // Exactly one whitespace byte separates the header from the samples.
    if (!std::isspace(in.get())) throw FormatError("PGM: malformed P5 header");
    std::string buf(r.values.size(), '\0');
    if (!in.read(buf.data(), static_cast<std::streamsize>(buf.size()))) {
      throw FormatError("PGM: truncated P5 pixel data");
    }
    for (std::size_t i = 0; i < buf.size(); ++i) {
      r.values[i] = static_cast<unsigned char>(buf[i]);
    }
  } else {
    for (auto& v : r.values) {
      skip_space_and_comments(in);
      long s = -1;
      if (!(in >> s)) throw FormatError("PGM: truncated P2 pixel data");
      if (s < 0 || s > maxval) {
        throw FormatError("PGM: sample " + std::to_string(s) + " exceeds maxval");
      }
      v = static_cast<int>(s);
    }
  }
  return r;
}

Raster read_pgm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const Raster& raster, PgmFormat format) {
  for (int v : raster.values) {
    if (v < 0 || v > 255) throw RangeError("PGM: sample outside [0, 255]");
  }
  out << (format == PgmFormat::kBinary ? "P5" : "P2") << '\n'
      << raster.cols << ' ' << raster.rows << '\n'
      << 255 << '\n';
  if (format == PgmFormat::kBinary) {
    for (int v : raster.values) out.put(static_cast<char>(v));
    return;
  }
  for (std::size_t y = 0; y < raster.rows; ++y) {
    for (std::size_t x = 0; x < raster.cols; ++x) {
      out << raster.at(y, x) << (x + 1 == raster.cols ? '\n' : ' ');
    }
  }
}

void write_pgm_file(const std::filesystem::path& path, const Raster& raster,
                    PgmFormat format) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    write_pgm(out, raster, format);
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into " + path.string());
  }
}

}  // namespace qshear
