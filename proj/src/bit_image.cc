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

#include "maskedge/bit_image.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace maskedge {
namespace {

using Word = BitImage::Word;
constexpr std::size_t kWordBits = BitImage::kWordBits;
constexpr Word kAllOnes = ~Word{0};
constexpr Word kMsb = Word{1} << (kWordBits - 1);

constexpr Word FillWord(PixelColor c) {
  return c == PixelColor::White ? kAllOnes : Word{0};
}

void RequireSameShape(const BitImage& a, const BitImage& b, const char* op) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::invalid_argument(
        std::string(op) + ": dimension mismatch (" + std::to_string(a.width()) +
        "x" + std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
        "x" + std::to_string(b.height()) + ")");
  }
}

}  // namespace

BitImage::BitImage(std::size_t width, std::size_t height)
    : width_(width), height_(height) {
  if (width == 0 || height == 0) {
    throw std::invalid_argument("BitImage: zero-area raster " +
                                std::to_string(width) + "x" +
                                std::to_string(height));
  }
  if (width > std::numeric_limits<std::size_t>::max() - (kWordBits - 1)) {
    throw std::length_error("BitImage: width overflows");
  }
  words_per_row_ = (width + kWordBits - 1) / kWordBits;
  if (height > std::vector<Word>().max_size() / words_per_row_) {
    throw std::length_error("BitImage: raster too large");
  }
  const std::size_t tail = width % kWordBits;
  padding_mask_ = tail == 0 ? Word{0} : (kAllOnes >> tail);
}

BitImage BitImage::Filled(std::size_t width, std::size_t height,
                          PixelColor color) {
  BitImage img(width, height);
  img.bits_.assign(img.words_per_row_ * height, FillWord(color));
  img.NormalizePadding();
  return img;
}

PixelColor BitImage::Get(std::size_t x, std::size_t y) const {
  if (x >= width_ || y >= height_) {
    throw std::out_of_range("BitImage::Get: (" + std::to_string(x) + ", " +
                            std::to_string(y) + ") outside " +
                            std::to_string(width_) + "x" +
                            std::to_string(height_));
  }
  const Word w = bits_[y * words_per_row_ + x / kWordBits];
  return (w & (kMsb >> (x % kWordBits))) ? PixelColor::White
                                          : PixelColor::Black;
}

void BitImage::Set(std::size_t x, std::size_t y, PixelColor color) {
  if (x >= width_ || y >= height_) {
    throw std::out_of_range("BitImage::Set: (" + std::to_string(x) + ", " +
                            std::to_string(y) + ") outside " +
                            std::to_string(width_) + "x" +
                            std::to_string(height_));
  }
  Word& w = bits_[y * words_per_row_ + x / kWordBits];
  const Word bit = kMsb >> (x % kWordBits);
  if (color == PixelColor::White) {
    w |= bit;
  } else {
    w &= ~bit;
  }
}

void BitImage::NormalizePadding() {
  if (padding_mask_ == 0) return;
  for (std::size_t i = words_per_row_ - 1; i < bits_.size();
       i += words_per_row_) {
    bits_[i] |= padding_mask_;
  }
}

BitImage& BitImage::operator&=(const BitImage& other) {
  RequireSameShape(*this, other, "And");
  std::transform(bits_.begin(), bits_.end(), other.bits_.begin(),
                 bits_.begin(), [](Word a, Word b) { return a & b; });
  return *this;
}

BitImage& BitImage::operator|=(const BitImage& other) {
  RequireSameShape(*this, other, "Or");
  std::transform(bits_.begin(), bits_.end(), other.bits_.begin(),
                 bits_.begin(), [](Word a, Word b) { return a | b; });
  return *this;
}

bool operator==(const BitImage& a, const BitImage& b) {
  return a.width_ == b.width_ && a.height_ == b.height_ && a.bits_ == b.bits_;
}

BitImage Invert(const BitImage& img) {
  BitImage out = img;
  for (std::size_t y = 0; y < out.height(); ++y) {
    for (Word& w : out.mutable_row(y)) w = ~w;
  }
  out.NormalizePadding();
  return out;
}

BitImage And(const BitImage& a, const BitImage& b) {
  BitImage out = a;
  out &= b;
  return out;
}

BitImage Or(const BitImage& a, const BitImage& b) {
  BitImage out = a;
  out |= b;
  return out;
}

BitImage Shift(const BitImage& img, Direction dir, BorderPolicy border) {
  const Word fill = FillWord(FillColor(border));
  const std::size_t n = img.words_per_row();
  BitImage out = img;

  switch (dir) {
    case Direction::Right:
    case Direction::Left: {
      const Word pad = img.padding_mask();
      // Padding temporarily holds the fill value so that a left shift pulls
      // the border color into the last visible column.
      const Word tail_fix = fill & pad;
      for (std::size_t y = 0; y < img.height(); ++y) {
        auto src = img.row(y);
        auto dst = out.mutable_row(y);
        if (dir == Direction::Right) {
          Word carry = fill & 1;
          for (std::size_t i = 0; i < n; ++i) {
            Word w = src[i];
            if (i + 1 == n) w = (w & ~pad) | tail_fix;
            dst[i] = (w >> 1) | (carry << (kWordBits - 1));
            carry = w & 1;
          }
        } else {
          Word carry = fill & 1;
          for (std::size_t i = n; i-- > 0;) {
            Word w = src[i];
            if (i + 1 == n) w = (w & ~pad) | tail_fix;
            dst[i] = (w << 1) | carry;
            carry = w >> (kWordBits - 1);
          }
        }
      }
      break;
    }
    case Direction::Down:
    case Direction::Up: {
      const std::size_t h = img.height();
      for (std::size_t y = 0; y < h; ++y) {
        auto dst = out.mutable_row(y);
        // Down: out row y comes from row y-1; Up: from row y+1.
        const bool outside = dir == Direction::Down ? y == 0 : y + 1 == h;
        if (outside) {
          std::fill(dst.begin(), dst.end(), fill);
        } else {
          auto src = img.row(dir == Direction::Down ? y - 1 : y + 1);
          std::copy(src.begin(), src.end(), dst.begin());
        }
      }
      break;
    }
  }
  out.NormalizePadding();
  return out;
}

std::size_t CountBlack(const BitImage& img) {
  // Padding is white, so every zero bit is a visible black pixel.
  std::size_t count = 0;
  for (Word w : img.words()) count += static_cast<std::size_t>(std::popcount(~w));
  return count;
}

BitImage ExtractRows(const BitImage& img, std::size_t first,
                     std::size_t count) {
  if (count == 0 || first > img.height() || count > img.height() - first) {
    throw std::out_of_range("ExtractRows: rows [" + std::to_string(first) +
                            ", " + std::to_string(first + count) +
                            ") outside height " + std::to_string(img.height()));
  }
  BitImage out(img.width(), count);
  const auto begin = img.bits_.begin() +
                     static_cast<std::ptrdiff_t>(first * img.words_per_row_);
  out.bits_.assign(begin,
                   begin + static_cast<std::ptrdiff_t>(count * img.words_per_row_));
  return out;
}

void CopyRows(const BitImage& src, std::size_t src_y, std::size_t count,
              BitImage& dst, std::size_t dst_y) {
  if (src.width() != dst.width()) {
    throw std::invalid_argument("CopyRows: width mismatch");
  }
  if (src_y > src.height() || count > src.height() - src_y ||
      dst_y > dst.height() || count > dst.height() - dst_y) {
    throw std::out_of_range("CopyRows: row range outside raster");
  }
  for (std::size_t i = 0; i < count; ++i) {
    auto from = src.row(src_y + i);
    std::copy(from.begin(), from.end(), dst.mutable_row(dst_y + i).begin());
  }
}

std::vector<PixelCoord> FindDifferences(const BitImage& a, const BitImage& b,
                                        std::size_t limit) {
  RequireSameShape(a, b, "FindDifferences");
  std::vector<PixelCoord> diffs;
  for (std::size_t y = 0; y < a.height() && diffs.size() < limit; ++y) {
    auto ra = a.row(y);
    auto rb = b.row(y);
    for (std::size_t i = 0; i < ra.size() && diffs.size() < limit; ++i) {
      Word delta = ra[i] ^ rb[i];
      while (delta != 0 && diffs.size() < limit) {
        const auto lead = static_cast<std::size_t>(std::countl_zero(delta));
        diffs.push_back({i * kWordBits + lead, y});
        delta &= ~(kMsb >> lead);
      }
    }
  }
  return diffs;
}

}  // namespace maskedge
