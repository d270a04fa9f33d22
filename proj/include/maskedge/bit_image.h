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

#ifndef MASKEDGE_BIT_IMAGE_H_
#define MASKEDGE_BIT_IMAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace maskedge {

// Bilevel pixel value. The numeric value is the stored bit.
enum class PixelColor : std::uint8_t { Black = 0, White = 1 };

constexpr PixelColor Flip(PixelColor c) {
  return c == PixelColor::Black ? PixelColor::White : PixelColor::Black;
}

enum class Direction { Left, Right, Up, Down };

constexpr Direction Opposite(Direction d) {
  switch (d) {
    case Direction::Left:
      return Direction::Right;
    case Direction::Right:
      return Direction::Left;
    case Direction::Up:
      return Direction::Down;
    case Direction::Down:
      break;
  }
  return Direction::Up;
}

// Unit step of a direction in image coordinates (y grows downward).
struct Step {
  int dx;
  int dy;
};

constexpr Step UnitStep(Direction d) {
  switch (d) {
    case Direction::Left:
      return {-1, 0};
    case Direction::Right:
      return {1, 0};
    case Direction::Up:
      return {0, -1};
    case Direction::Down:
      break;
  }
  return {0, 1};
}

inline constexpr Direction kAllDirections[] = {Direction::Left, Direction::Right,
                                               Direction::Up, Direction::Down};

// Value assumed for pixels outside the raster.
enum class BorderPolicy { WhiteOutside, BlackOutside };

constexpr PixelColor FillColor(BorderPolicy border) {
  return border == BorderPolicy::WhiteOutside ? PixelColor::White
                                              : PixelColor::Black;
}

/**
 * Bit-packed bilevel raster.
 *
 * Pixels are stored one bit each, 1 = white (background), 0 = black (figure).
 * Rows are padded to whole words; the leftmost pixel of a word is its most
 * significant bit. Padding bits are always 1, so whole-word operations never
 * need to look at the image width except on the last word of a row.
 */
class BitImage {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  // Throws std::invalid_argument for zero dimensions and std::length_error
  // when the raster would not be addressable.
  static BitImage Filled(std::size_t width, std::size_t height, PixelColor color);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t words_per_row() const { return words_per_row_; }

  // Bounds-checked; throws std::out_of_range.
  PixelColor Get(std::size_t x, std::size_t y) const;
  void Set(std::size_t x, std::size_t y, PixelColor color);

  std::span<const Word> words() const { return bits_; }
  std::span<const Word> row(std::size_t y) const {
    return std::span<const Word>(bits_).subspan(y * words_per_row_, words_per_row_);
  }
  std::span<Word> mutable_row(std::size_t y) {
    return std::span<Word>(bits_).subspan(y * words_per_row_, words_per_row_);
  }

  // Bits of the last word in each row that lie beyond the image width.
  Word padding_mask() const { return padding_mask_; }

  // Forces every padding bit back to 1.
  void NormalizePadding();

  friend BitImage ExtractRows(const BitImage&, std::size_t, std::size_t);

  // Dimension-checked in-place combination, used by the allocating variants.
  BitImage& operator&=(const BitImage& other);
  BitImage& operator|=(const BitImage& other);

  // Bit-exact over visible pixels; false on mismatched dimensions.
  friend bool operator==(const BitImage& a, const BitImage& b);

 private:
  BitImage(std::size_t width, std::size_t height);

  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::size_t words_per_row_ = 0;
  Word padding_mask_ = 0;
  std::vector<Word> bits_;
};

BitImage Invert(const BitImage& img);

// Throw std::invalid_argument on dimension mismatch.
BitImage And(const BitImage& a, const BitImage& b);
BitImage Or(const BitImage& a, const BitImage& b);

// One-pixel translation: out(x, y) = in(x - dx, y - dy) for the unit step of
// `dir`. Pixels sourced from outside the raster take the border fill color.
BitImage Shift(const BitImage& img, Direction dir,
               BorderPolicy border = BorderPolicy::WhiteOutside);

inline bool Equals(const BitImage& a, const BitImage& b) { return a == b; }

std::size_t CountBlack(const BitImage& img);

// Rows [first, first + count) as a new raster. Throws std::out_of_range.
BitImage ExtractRows(const BitImage& img, std::size_t first, std::size_t count);

// Copies `count` rows of `src` starting at `src_y` over the rows of `dst`
// starting at `dst_y`. Widths must match; throws std::invalid_argument or
// std::out_of_range.
void CopyRows(const BitImage& src, std::size_t src_y, std::size_t count,
              BitImage& dst, std::size_t dst_y);

struct PixelCoord {
  std::size_t x;
  std::size_t y;
  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

// Coordinates where two same-sized rasters disagree, in row-major order, at
// most `limit` of them. Throws std::invalid_argument on dimension mismatch.
std::vector<PixelCoord> FindDifferences(const BitImage& a, const BitImage& b,
                                        std::size_t limit = 1);

}  // namespace maskedge

#endif  // MASKEDGE_BIT_IMAGE_H_
