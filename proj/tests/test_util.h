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

// Helpers shared by the unit and acceptance suites. Everything here works
// pixel by pixel through Get/Set so it stays independent of the word-level
// code under test.

#ifndef MASKEDGE_TESTS_TEST_UTIL_H_
#define MASKEDGE_TESTS_TEST_UTIL_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>

#include "maskedge/bit_image.h"

namespace maskedge::testing {

// Rows drawn with '#' for black and '.' for white.
inline BitImage FromRows(std::initializer_list<std::string_view> rows) {
  const std::size_t h = rows.size();
  const std::size_t w = rows.begin()->size();
  BitImage img = BitImage::Filled(w, h, PixelColor::White);
  std::size_t y = 0;
  for (std::string_view row : rows) {
    for (std::size_t x = 0; x < w; ++x) {
      if (row[x] == '#') img.Set(x, y, PixelColor::Black);
    }
    ++y;
  }
  return img;
}

inline std::string ToRows(const BitImage& img) {
  std::string out;
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      out.push_back(img.Get(x, y) == PixelColor::Black ? '#' : '.');
    }
    out.push_back('\n');
  }
  return out;
}

// Bit i of `pattern` (row-major) set means pixel i is black.
inline BitImage FromPattern(std::size_t w, std::size_t h,
                            std::uint64_t pattern) {
  BitImage img = BitImage::Filled(w, h, PixelColor::White);
  for (std::size_t i = 0; i < w * h; ++i) {
    if ((pattern >> i) & 1) img.Set(i % w, i / w, PixelColor::Black);
  }
  return img;
}

inline BitImage RandomImage(std::size_t w, std::size_t h, double density,
                            std::mt19937_64& rng) {
  std::bernoulli_distribution black(density);
  BitImage img = BitImage::Filled(w, h, PixelColor::White);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      if (black(rng)) img.Set(x, y, PixelColor::Black);
    }
  }
  return img;
}

// Color at (x + dx, y + dy), or `fill` outside the raster.
inline PixelColor ColorAt(const BitImage& img, std::size_t x, std::size_t y,
                          int dx, int dy, PixelColor fill) {
  const long long nx = static_cast<long long>(x) + dx;
  const long long ny = static_cast<long long>(y) + dy;
  if (nx < 0 || ny < 0 || nx >= static_cast<long long>(img.width()) ||
      ny >= static_cast<long long>(img.height())) {
    return fill;
  }
  return img.Get(static_cast<std::size_t>(nx), static_cast<std::size_t>(ny));
}

inline BitImage ReferenceShift(const BitImage& img, Direction dir,
                               BorderPolicy border) {
  const Step step = UnitStep(dir);
  const PixelColor fill = FillColor(border);
  BitImage out = BitImage::Filled(img.width(), img.height(), PixelColor::White);
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      out.Set(x, y, ColorAt(img, x, y, -step.dx, -step.dy, fill));
    }
  }
  return out;
}

// Marker raster (White = marked) of black pixels whose `side` neighbor is
// white.
inline BitImage ReferenceFundamentalEdge(const BitImage& img, Direction side,
                                         BorderPolicy border) {
  const Step step = UnitStep(side);
  const PixelColor fill = FillColor(border);
  BitImage out = BitImage::Filled(img.width(), img.height(), PixelColor::Black);
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (img.Get(x, y) == PixelColor::Black &&
          ColorAt(img, x, y, step.dx, step.dy, fill) == PixelColor::White) {
        out.Set(x, y, PixelColor::White);
      }
    }
  }
  return out;
}

// Every padding bit of every row is 1.
inline bool PaddingIsWhite(const BitImage& img) {
  for (std::size_t y = 0; y < img.height(); ++y) {
    if ((img.row(y).back() & img.padding_mask()) != img.padding_mask()) {
      return false;
    }
  }
  return true;
}

}  // namespace maskedge::testing

#endif  // MASKEDGE_TESTS_TEST_UTIL_H_
