// Copyright 2026 The maskedge Authors. All Rights Reserved.
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

#ifndef MASKEDGE_PNM_H_
#define MASKEDGE_PNM_H_

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "maskedge/binarize.h"
#include "maskedge/bit_image.h"

namespace maskedge {

// Malformed or truncated PBM/PGM data. `offset()` is the byte position at
// which parsing failed.
class PnmError : public std::runtime_error {
 public:
  PnmError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class PnmFormat { PlainPbm, RawPbm, PlainPgm, RawPgm };  // P1 P4 P2 P5

struct PnmHeader {
  PnmFormat format;
  std::size_t width;
  std::size_t height;
  unsigned maxval;             // 1 for bitmaps
  std::size_t payload_offset;  // first raster byte
};

// Parses the magic number and header fields, skipping '#' comments. Exactly
// one whitespace byte separates the last field from the raster.
PnmHeader ParsePnmHeader(std::string_view bytes);

// PBM stores 1 = black; the returned raster uses 1 = white.
BitImage ReadPbm(std::string_view bytes);
// P4 when `raw`, else P1 with one text line per row. P4 row padding bits
// are written as 0.
std::string WritePbm(const BitImage& img, bool raw = true);

// maxval above 255 is rejected; samples are returned without rescaling.
GrayImage ReadPgm(std::string_view bytes);
std::string WritePgm(const GrayImage& img, bool raw = true);

// Whole-file helpers; throw std::runtime_error naming the path.
std::string ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes);

}  // namespace maskedge

#endif  // MASKEDGE_PNM_H_
