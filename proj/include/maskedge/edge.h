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

#ifndef MASKEDGE_EDGE_H_
#define MASKEDGE_EDGE_H_

#include <array>
#include <cstddef>

#include "maskedge/bit_image.h"

namespace maskedge {

/**
 * The eight neighbors of a pixel, numbered counter-clockwise starting at the
 * upper-right corner:
 *
 *     3 2 1
 *     4 P 8
 *     5 6 7
 *
 * Indices 2, 4, 6 and 8 are the 4-neighbors.
 */
class Neighborhood {
 public:
  struct Offset {
    int dx;
    int dy;
  };

  static constexpr std::array<Offset, 8> kOffsets = {{
      {1, -1},   // 1
      {0, -1},   // 2
      {-1, -1},  // 3
      {-1, 0},   // 4
      {-1, 1},   // 5
      {0, 1},    // 6
      {1, 1},    // 7
      {1, 0},    // 8
  }};
  static constexpr std::array<int, 4> kFourNeighbors = {2, 4, 6, 8};

  // Samples around (x, y); out-of-raster neighbors take the border color.
  // Throws std::out_of_range if (x, y) is not inside the image.
  static Neighborhood Sample(const BitImage& img, std::size_t x, std::size_t y,
                             BorderPolicy border);

  static constexpr Offset OffsetOf(int index) { return kOffsets[index - 1]; }

  // 1-based, 1..8.
  PixelColor at(int index) const { return samples_[index - 1]; }

  int CountBlack() const;

 private:
  std::array<PixelColor, 8> samples_{};
};

// Marker raster: bit 1 marks an edge pixel, bit 0 a non-edge pixel. This is
// the form the fundamental edges take before the final inversion.
struct EdgeSet {
  BitImage markers;
};

// The negative of the image: 1 exactly on figure (black) pixels.
BitImage BuildMask(const BitImage& img);

// Black pixels whose neighbor on `side` is white. The image is shifted one
// pixel away from `side` and intersected with the mask.
// Throws std::invalid_argument if the mask and image differ in size.
EdgeSet FundamentalEdge(const BitImage& img, const BitImage& mask,
                        Direction side,
                        BorderPolicy border = BorderPolicy::WhiteOutside);

// Union of the four fundamental edges, in marker form.
EdgeSet EdgeMarkers(const BitImage& img,
                    BorderPolicy border = BorderPolicy::WhiteOutside);

// Edge image by the method of masks: black edge pixels on white.
//
// Large rasters are processed in horizontal bands so that the image, its mask
// and the four fundamental edges of one band stay cache-resident together.
// Each band carries one halo row above and below; the result does not depend
// on the banding.
BitImage DetectEdgesMask(const BitImage& img,
                         BorderPolicy border = BorderPolicy::WhiteOutside);

// As above with an explicit band height in rows (>= 1).
BitImage DetectEdgesMask(const BitImage& img, BorderPolicy border,
                         std::size_t band_rows);

// Band height DetectEdgesMask picks for a raster of this width.
std::size_t DefaultBandRows(const BitImage& img);

// True iff (x, y) is black and at least one 4-neighbor is white.
bool IsEdgePoint(const BitImage& img, std::size_t x, std::size_t y,
                 BorderPolicy border = BorderPolicy::WhiteOutside);

// Per-pixel scan with IsEdgePoint. Same output convention as DetectEdgesMask.
BitImage DetectEdgesScan(const BitImage& img,
                         BorderPolicy border = BorderPolicy::WhiteOutside);

// Second edge-point clause: a black pixel with at most one black 8-neighbor.
// Throws std::invalid_argument for a white center.
bool AtMostOneBlack8Neighbor(const BitImage& img, std::size_t x, std::size_t y,
                             BorderPolicy border = BorderPolicy::WhiteOutside);

}  // namespace maskedge

#endif  // MASKEDGE_EDGE_H_
