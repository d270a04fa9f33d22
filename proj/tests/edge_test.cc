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

#include <gtest/gtest.h>

#include <random>

#include "test_util.h"

namespace maskedge {
namespace {

using testing::FromPattern;
using testing::FromRows;
using testing::RandomImage;
using testing::ReferenceFundamentalEdge;

constexpr BorderPolicy kBorders[] = {BorderPolicy::WhiteOutside,
                                     BorderPolicy::BlackOutside};

TEST(NeighborhoodTest, NumberingFollowsCounterClockwiseLayout) {
  // Each neighbor gets a distinct black pixel so indices can be checked.
  //   3 2 1
  //   4 P 8
  //   5 6 7
  for (int index = 1; index <= 8; ++index) {
    BitImage img = BitImage::Filled(3, 3, PixelColor::White);
    const auto off = Neighborhood::OffsetOf(index);
    img.Set(1 + off.dx, 1 + off.dy, PixelColor::Black);
    const Neighborhood n = Neighborhood::Sample(img, 1, 1, BorderPolicy::WhiteOutside);
    for (int j = 1; j <= 8; ++j) {
      EXPECT_EQ(n.at(j) == PixelColor::Black, j == index) << index << " " << j;
    }
  }
  EXPECT_EQ(Neighborhood::OffsetOf(1).dx, 1);
  EXPECT_EQ(Neighborhood::OffsetOf(1).dy, -1);
  EXPECT_EQ(Neighborhood::OffsetOf(2).dy, -1);
  EXPECT_EQ(Neighborhood::OffsetOf(4).dx, -1);
  EXPECT_EQ(Neighborhood::OffsetOf(6).dy, 1);
  EXPECT_EQ(Neighborhood::OffsetOf(8).dx, 1);
}

TEST(NeighborhoodTest, OutsideTakesBorderColor) {
  const BitImage img = FromRows({"."});
  EXPECT_EQ(Neighborhood::Sample(img, 0, 0, BorderPolicy::WhiteOutside).CountBlack(), 0);
  EXPECT_EQ(Neighborhood::Sample(img, 0, 0, BorderPolicy::BlackOutside).CountBlack(), 8);
  EXPECT_THROW(Neighborhood::Sample(img, 1, 0, BorderPolicy::WhiteOutside),
               std::out_of_range);
}

TEST(EdgeTest, BuildMaskIsNegative) {
  EXPECT_EQ(BuildMask(FromRows({".##"})), FromRows({"#.."}));
  EXPECT_EQ(BuildMask(BitImage::Filled(4, 4, PixelColor::White)),
            BitImage::Filled(4, 4, PixelColor::Black));
  std::mt19937_64 rng(1);
  const BitImage glyph = RandomImage(37, 21, 0.4, rng);
  EXPECT_EQ(BuildMask(BuildMask(glyph)), glyph);
}

TEST(EdgeTest, FundamentalEdgeByHand) {
  const BitImage img = FromRows({".##"});
  const BitImage mask = BuildMask(img);
  // Marker convention: '.' (bit 1) marks an edge pixel.
  EXPECT_EQ(FundamentalEdge(img, mask, Direction::Left).markers, FromRows({"#.#"}));
  EXPECT_EQ(FundamentalEdge(img, mask, Direction::Right,
                            BorderPolicy::WhiteOutside)
                .markers,
            FromRows({"##."}));
  EXPECT_EQ(FundamentalEdge(img, mask, Direction::Right,
                            BorderPolicy::BlackOutside)
                .markers,
            FromRows({"###"}));
}

TEST(EdgeTest, FundamentalEdgeMatchesNeighborScan) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const BitImage img = RandomImage(8, 8, 0.5, rng);
    const BitImage mask = BuildMask(img);
    for (Direction side : kAllDirections) {
      for (BorderPolicy b : kBorders) {
        EXPECT_EQ(FundamentalEdge(img, mask, side, b).markers,
                  ReferenceFundamentalEdge(img, side, b));
      }
    }
  }
}

TEST(EdgeTest, FundamentalEdgeRejectsMismatchedMask) {
  const BitImage img = BitImage::Filled(4, 4, PixelColor::White);
  EXPECT_THROW(FundamentalEdge(img, BitImage::Filled(4, 5, PixelColor::Black),
                               Direction::Up),
               std::invalid_argument);
}

TEST(EdgeTest, AllWhiteHasNoEdges) {
  const BitImage white = BitImage::Filled(9, 7, PixelColor::White);
  for (BorderPolicy b : kBorders) {
    EXPECT_EQ(DetectEdgesMask(white, b), white);
    EXPECT_EQ(DetectEdgesScan(white, b), white);
  }
}

TEST(EdgeTest, SolidSquareKeepsRing) {
  const BitImage img = BitImage::Filled(3, 3, PixelColor::Black);
  const BitImage ring = FromRows({"###", "#.#", "###"});
  EXPECT_EQ(DetectEdgesMask(img), ring);
  EXPECT_EQ(DetectEdgesScan(img), ring);
  // Nothing outside is white, so nothing is an edge.
  EXPECT_EQ(DetectEdgesMask(img, BorderPolicy::BlackOutside),
            BitImage::Filled(3, 3, PixelColor::White));
}

TEST(EdgeTest, CenteredBlock) {
  const BitImage img = FromRows({".....", ".###.", ".###.", ".###.", "....."});
  const BitImage ring = FromRows({".....", ".###.", ".#.#.", ".###.", "....."});
  for (BorderPolicy b : kBorders) {
    EXPECT_EQ(DetectEdgesMask(img, b), ring);
    EXPECT_EQ(DetectEdgesScan(img, b), ring);
  }
}

TEST(EdgeTest, IsEdgePoint) {
  const BitImage dot = FromRows({"...", ".#.", "..."});
  EXPECT_TRUE(IsEdgePoint(dot, 1, 1));
  EXPECT_FALSE(IsEdgePoint(dot, 0, 0));
  const BitImage solid = BitImage::Filled(3, 3, PixelColor::Black);
  EXPECT_FALSE(IsEdgePoint(solid, 1, 1, BorderPolicy::WhiteOutside));
  EXPECT_TRUE(IsEdgePoint(solid, 0, 1, BorderPolicy::WhiteOutside));
  EXPECT_FALSE(IsEdgePoint(solid, 0, 1, BorderPolicy::BlackOutside));
  EXPECT_THROW(IsEdgePoint(solid, 3, 0), std::out_of_range);
}

TEST(EdgeTest, EightNeighborClause) {
  const BitImage dot = FromRows({"...", ".#.", "..."});
  EXPECT_TRUE(AtMostOneBlack8Neighbor(dot, 1, 1));

  const BitImage diagonal = FromRows({"..#", ".#.", "..."});
  EXPECT_TRUE(AtMostOneBlack8Neighbor(diagonal, 1, 1));
  EXPECT_TRUE(IsEdgePoint(diagonal, 1, 1));

  const BitImage solid = BitImage::Filled(3, 3, PixelColor::Black);
  EXPECT_FALSE(AtMostOneBlack8Neighbor(solid, 1, 1));
  EXPECT_THROW(AtMostOneBlack8Neighbor(dot, 0, 0), std::invalid_argument);
  EXPECT_THROW(AtMostOneBlack8Neighbor(dot, 0, 3), std::out_of_range);
}

TEST(EdgeTest, ScanMatchesMaskExhaustively3x3) {
  for (std::uint64_t p = 0; p < (1u << 9); ++p) {
    const BitImage img = FromPattern(3, 3, p);
    for (BorderPolicy b : kBorders) {
      ASSERT_EQ(DetectEdgesMask(img, b), DetectEdgesScan(img, b)) << p;
    }
  }
}

TEST(EdgeTest, ScanMatchesMaskRandom16) {
  std::mt19937_64 rng(16);
  const BitImage img = RandomImage(16, 16, 0.5, rng);
  for (BorderPolicy b : kBorders) {
    const BitImage scan = DetectEdgesScan(img, b);
    const BitImage mask = DetectEdgesMask(img, b);
    for (std::size_t y = 0; y < 16; ++y) {
      for (std::size_t x = 0; x < 16; ++x) {
        ASSERT_EQ(scan.Get(x, y), mask.Get(x, y)) << x << "," << y;
      }
    }
  }
}

TEST(EdgeTest, Properties) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t w = 1 + rng() % 80, h = 1 + rng() % 20;
    const double density = (trial % 3 + 1) * 0.3;
    const BitImage img = RandomImage(w, h, density, rng);
    for (BorderPolicy b : kBorders) {
      const BitImage edges = DetectEdgesMask(img, b);
      // Edges lie on the figure: black(edges) is a subset of black(img).
      ASSERT_EQ(Or(edges, img), edges);

      const EdgeSet all = EdgeMarkers(img, b);
      ASSERT_EQ(all.markers, Invert(edges));
      const BitImage mask = BuildMask(img);
      for (Direction side : kAllDirections) {
        const EdgeSet one = FundamentalEdge(img, mask, side, b);
        ASSERT_EQ(Or(one.markers, all.markers), all.markers);
        // Markers only on black source pixels.
        ASSERT_EQ(And(one.markers, img), BitImage::Filled(w, h, PixelColor::Black));
      }

      for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
          if (img.Get(x, y) == PixelColor::Black &&
              AtMostOneBlack8Neighbor(img, x, y, b)) {
            ASSERT_TRUE(IsEdgePoint(img, x, y, b));
          }
        }
      }
    }

    const BitImage white_out = DetectEdgesMask(img, BorderPolicy::WhiteOutside);
    const BitImage black_out = DetectEdgesMask(img, BorderPolicy::BlackOutside);
    for (std::size_t y = 2; y + 2 < h; ++y) {
      for (std::size_t x = 2; x + 2 < w; ++x) {
        ASSERT_EQ(white_out.Get(x, y), black_out.Get(x, y));
      }
    }
  }
}

TEST(EdgeTest, BandingDoesNotChangeResult) {
  std::mt19937_64 rng(31);
  const BitImage img = RandomImage(300, 37, 0.5, rng);
  for (BorderPolicy b : kBorders) {
    const BitImage expected = DetectEdgesScan(img, b);
    for (std::size_t band : {1u, 2u, 3u, 7u, 36u, 37u, 100u}) {
      ASSERT_EQ(DetectEdgesMask(img, b, band), expected) << band;
    }
  }
  EXPECT_THROW(DetectEdgesMask(img, BorderPolicy::WhiteOutside, 0),
               std::invalid_argument);
}

TEST(EdgeTest, DefaultBandingOnLargeRaster) {
  std::mt19937_64 rng(1024);
  const BitImage img = RandomImage(1000, 300, 0.5, rng);
  ASSERT_LT(DefaultBandRows(img), img.height());
  EXPECT_EQ(DetectEdgesMask(img), DetectEdgesScan(img));
  EXPECT_EQ(DetectEdgesMask(img, BorderPolicy::BlackOutside),
            DetectEdgesMask(img, BorderPolicy::BlackOutside, img.height()));
}

TEST(EdgeTest, ThinFiguresAreFixedPoints) {
  const BitImage strokes = FromRows({
      ".........",
      ".#######.",
      "........#",
      "..#.....#",
      "..#..##..",
      "..#......",
  });
  for (BorderPolicy b : kBorders) {
    EXPECT_EQ(DetectEdgesMask(strokes, b), strokes);
  }
  const BitImage edges = DetectEdgesMask(
      FromRows({"......", ".####.", ".####.", ".####.", ".####.", "......"}));
  EXPECT_EQ(DetectEdgesMask(edges), edges);
}

}  // namespace
}  // namespace maskedge
