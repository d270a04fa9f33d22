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

#include "maskedge/edge.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace maskedge {
namespace {

// Color of the pixel at (x + dx, y + dy), or the border color outside.
PixelColor SampleAt(const BitImage& img, std::size_t x, std::size_t y, int dx,
                    int dy, BorderPolicy border) {
  if ((dx < 0 && x == 0) || (dy < 0 && y == 0) ||
      (dx > 0 && x + 1 == img.width()) || (dy > 0 && y + 1 == img.height())) {
    return FillColor(border);
  }
  return img.Get(x + dx, y + dy);
}

void RequireInside(const BitImage& img, std::size_t x, std::size_t y,
                   const char* op) {
  if (x >= img.width() || y >= img.height()) {
    throw std::out_of_range(std::string(op) + ": (" + std::to_string(x) +
                            ", " + std::to_string(y) + ") outside " +
                            std::to_string(img.width()) + "x" +
                            std::to_string(img.height()));
  }
}

}  // namespace

Neighborhood Neighborhood::Sample(const BitImage& img, std::size_t x,
                                  std::size_t y, BorderPolicy border) {
  RequireInside(img, x, y, "Neighborhood::Sample");
  Neighborhood n;
  for (std::size_t i = 0; i < kOffsets.size(); ++i) {
    n.samples_[i] = SampleAt(img, x, y, kOffsets[i].dx, kOffsets[i].dy, border);
  }
  return n;
}

int Neighborhood::CountBlack() const {
  return static_cast<int>(
      std::count(samples_.begin(), samples_.end(), PixelColor::Black));
}

BitImage BuildMask(const BitImage& img) { return Invert(img); }

EdgeSet FundamentalEdge(const BitImage& img, const BitImage& mask,
                        Direction side, BorderPolicy border) {
  // The left edge is found by moving the image right, and so on.
  BitImage moved = Shift(img, Opposite(side), border);
  moved &= mask;
  return EdgeSet{std::move(moved)};
}

EdgeSet EdgeMarkers(const BitImage& img, BorderPolicy border) {
  const BitImage mask = BuildMask(img);
  EdgeSet edges = FundamentalEdge(img, mask, Direction::Left, border);
  for (Direction side : {Direction::Right, Direction::Up, Direction::Down}) {
    edges.markers |= FundamentalEdge(img, mask, side, border).markers;
  }
  return edges;
}

std::size_t DefaultBandRows(const BitImage& img) {
  // 16 KiB per band raster; roughly six are live at once, and each stays
  // below the allocator's mmap threshold so buffers are recycled.
  constexpr std::size_t kBandWords = std::size_t{1} << 11;
  return std::max<std::size_t>(1, kBandWords / img.words_per_row());
}

BitImage DetectEdgesMask(const BitImage& img, BorderPolicy border) {
  return DetectEdgesMask(img, border, DefaultBandRows(img));
}

BitImage DetectEdgesMask(const BitImage& img, BorderPolicy border,
                         std::size_t band_rows) {
  if (band_rows == 0) {
    throw std::invalid_argument("DetectEdgesMask: band_rows must be positive");
  }
  const std::size_t h = img.height();
  if (band_rows >= h) return Invert(EdgeMarkers(img, border).markers);

  BitImage out = BitImage::Filled(img.width(), h, PixelColor::White);
  for (std::size_t y0 = 0; y0 < h; y0 += band_rows) {
    const std::size_t y1 = std::min(h, y0 + band_rows);
    // Halo rows supply the true vertical neighbors; their own output is
    // dropped. At the raster edge the border policy applies as usual.
    const std::size_t top = y0 > 0 ? y0 - 1 : y0;
    const std::size_t bottom = y1 < h ? y1 + 1 : y1;
    const BitImage band = ExtractRows(img, top, bottom - top);
    const BitImage edges = Invert(EdgeMarkers(band, border).markers);
    CopyRows(edges, y0 - top, y1 - y0, out, y0);
  }
  return out;
}

bool IsEdgePoint(const BitImage& img, std::size_t x, std::size_t y,
                 BorderPolicy border) {
  RequireInside(img, x, y, "IsEdgePoint");
  if (img.Get(x, y) == PixelColor::White) return false;
  for (int index : Neighborhood::kFourNeighbors) {
    const auto [dx, dy] = Neighborhood::OffsetOf(index);
    if (SampleAt(img, x, y, dx, dy, border) == PixelColor::White) return true;
  }
  return false;
}

BitImage DetectEdgesScan(const BitImage& img, BorderPolicy border) {
  BitImage out = BitImage::Filled(img.width(), img.height(), PixelColor::White);
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (IsEdgePoint(img, x, y, border)) out.Set(x, y, PixelColor::Black);
    }
  }
  return out;
}

bool AtMostOneBlack8Neighbor(const BitImage& img, std::size_t x, std::size_t y,
                             BorderPolicy border) {
  RequireInside(img, x, y, "AtMostOneBlack8Neighbor");
  if (img.Get(x, y) != PixelColor::Black) {
    throw std::invalid_argument("AtMostOneBlack8Neighbor: center (" +
                                std::to_string(x) + ", " + std::to_string(y) +
                                ") is white");
  }
  return Neighborhood::Sample(img, x, y, border).CountBlack() <= 1;
}

}  // namespace maskedge
