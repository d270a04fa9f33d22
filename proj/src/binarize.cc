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

#include "maskedge/binarize.h"

#include <stdexcept>
#include <string>

namespace maskedge {

GrayImage::GrayImage(std::size_t width, std::size_t height,
                     std::vector<std::uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (width == 0 || height == 0) {
    throw std::invalid_argument("GrayImage: zero-area raster");
  }
  if (height > samples_.max_size() / width ||
      samples_.size() != width * height) {
    throw std::invalid_argument("GrayImage: expected " + std::to_string(width) +
                                "x" + std::to_string(height) +
                                " samples, got " +
                                std::to_string(samples_.size()));
  }
}

BitImage Threshold(const GrayImage& gray, std::uint8_t threshold) {
  BitImage out =
      BitImage::Filled(gray.width(), gray.height(), PixelColor::White);
  for (std::size_t y = 0; y < gray.height(); ++y) {
    auto row = out.mutable_row(y);
    for (std::size_t x = 0; x < gray.width(); ++x) {
      if (gray.at(x, y) < threshold) {
        row[x / BitImage::kWordBits] &=
            ~(BitImage::Word{1} << (BitImage::kWordBits - 1 - x % BitImage::kWordBits));
      }
    }
  }
  return out;
}

std::array<std::uint64_t, 256> Histogram(const GrayImage& gray) {
  std::array<std::uint64_t, 256> hist{};
  for (std::uint8_t s : gray.samples()) ++hist[s];
  return hist;
}

long double BetweenClassVariance(std::span<const std::uint64_t, 256> histogram,
                                 int threshold) {
  // w0 w1 (mu0 - mu1)^2 = (S0 n1 - S1 n0)^2 / (N^2 n0 n1); N^2 is dropped.
  __int128 n0 = 0, s0 = 0, n = 0, s = 0;
  for (int v = 0; v < 256; ++v) {
    const auto count = static_cast<__int128>(histogram[v]);
    n += count;
    s += count * v;
    if (v < threshold) {
      n0 += count;
      s0 += count * v;
    }
  }
  const __int128 n1 = n - n0;
  const __int128 s1 = s - s0;
  if (n0 == 0 || n1 == 0) return 0.0L;
  const auto diff = static_cast<long double>(s0 * n1 - s1 * n0);
  return diff * diff /
         (static_cast<long double>(n0) * static_cast<long double>(n1));
}

std::uint8_t OtsuThreshold(const GrayImage& gray) {
  const auto hist = Histogram(gray);
  __int128 n = 0, s = 0;
  for (int v = 0; v < 256; ++v) {
    n += hist[v];
    s += static_cast<__int128>(hist[v]) * v;
  }

  int best_t = 0;
  long double best = 0.0L;
  __int128 n0 = 0, s0 = 0;
  // Class 0 holds samples below t; t = 0 leaves it empty.
  for (int t = 1; t < 256; ++t) {
    n0 += hist[t - 1];
    s0 += static_cast<__int128>(hist[t - 1]) * (t - 1);
    const __int128 n1 = n - n0;
    if (n0 == 0 || n1 == 0) continue;
    const auto diff = static_cast<long double>(s0 * n1 - (s - s0) * n0);
    const long double var =
        diff * diff /
        (static_cast<long double>(n0) * static_cast<long double>(n1));
    if (var > best) {
      best = var;
      best_t = t;
    }
  }
  return static_cast<std::uint8_t>(best_t);
}

}  // namespace maskedge
