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

#ifndef MASKEDGE_BINARIZE_H_
#define MASKEDGE_BINARIZE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "maskedge/bit_image.h"

namespace maskedge {

// 8-bit luminance raster, row-major, 0 = darkest.
class GrayImage {
 public:
  // Throws std::invalid_argument on zero dimensions or a sample count that
  // does not equal width * height.
  GrayImage(std::size_t width, std::size_t height,
            std::vector<std::uint8_t> samples);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::span<const std::uint8_t> samples() const { return samples_; }
  std::uint8_t at(std::size_t x, std::size_t y) const {
    return samples_[y * width_ + x];
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> samples_;
};

// A sample becomes white iff it is >= threshold. Dark ink turns into figure.
BitImage Threshold(const GrayImage& gray, std::uint8_t threshold);

// Between-class variance of the split {s < t} / {s >= t} over a 256-bin
// histogram, up to a positive constant factor shared by every t. Zero when
// either class is empty.
long double BetweenClassVariance(std::span<const std::uint64_t, 256> histogram,
                                 int threshold);

std::array<std::uint64_t, 256> Histogram(const GrayImage& gray);

// Otsu's threshold: the t in 0..255 maximizing between-class variance,
// smallest t on ties.
std::uint8_t OtsuThreshold(const GrayImage& gray);

}  // namespace maskedge

#endif  // MASKEDGE_BINARIZE_H_
