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

#include "maskedge/pnm.h"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

namespace maskedge {
namespace {

using Word = BitImage::Word;
constexpr std::size_t kWordBits = BitImage::kWordBits;

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

class Cursor {
 public:
  explicit Cursor(std::string_view bytes, std::size_t pos = 0)
      : bytes_(bytes), pos_(pos) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= bytes_.size(); }

  void SkipSpaceAndComments() {
    while (!done()) {
      if (IsSpace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (!done() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t ReadUnsigned(const char* field) {
    SkipSpaceAndComments();
    if (done()) {
      throw PnmError(std::string("unexpected end of data, expected ") + field,
                     pos_);
    }
    if (!IsDigit(bytes_[pos_])) {
      throw PnmError(std::string("expected ") + field, pos_);
    }
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (!done() && IsDigit(bytes_[pos_])) {
      const std::size_t digit = static_cast<std::size_t>(bytes_[pos_] - '0');
      if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) {
        throw PnmError(std::string(field) + " overflows", start);
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  char Peek() const { return bytes_[pos_]; }
  void Advance() { ++pos_; }

 private:
  std::string_view bytes_;
  std::size_t pos_;
};

void RequirePayload(std::string_view bytes, std::size_t offset,
                    std::size_t needed) {
  if (bytes.size() - offset < needed) {
    throw PnmError("raster payload truncated: expected " +
                       std::to_string(needed) + " bytes, found " +
                       std::to_string(bytes.size() - offset),
                   bytes.size());
  }
}

}  // namespace

PnmError::PnmError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at byte offset " + std::to_string(offset)),
      offset_(offset) {}

PnmHeader ParsePnmHeader(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw PnmError("missing PNM magic number", 0);
  }
  PnmHeader header{};
  switch (bytes[1]) {
    case '1':
      header.format = PnmFormat::PlainPbm;
      break;
    case '2':
      header.format = PnmFormat::PlainPgm;
      break;
    case '4':
      header.format = PnmFormat::RawPbm;
      break;
    case '5':
      header.format = PnmFormat::RawPgm;
      break;
    default:
      throw PnmError(std::string("unsupported magic number P") + bytes[1], 1);
  }

  Cursor cur(bytes, 2);
  if (cur.done() || !(IsSpace(cur.Peek()) || cur.Peek() == '#')) {
    throw PnmError("expected whitespace after magic number", cur.pos());
  }
  const std::size_t width_at = (cur.SkipSpaceAndComments(), cur.pos());
  header.width = cur.ReadUnsigned("width");
  if (header.width == 0) throw PnmError("width must be positive", width_at);
  const std::size_t height_at = (cur.SkipSpaceAndComments(), cur.pos());
  header.height = cur.ReadUnsigned("height");
  if (header.height == 0) throw PnmError("height must be positive", height_at);

  header.maxval = 1;
  if (header.format == PnmFormat::PlainPgm ||
      header.format == PnmFormat::RawPgm) {
    const std::size_t maxval_at = (cur.SkipSpaceAndComments(), cur.pos());
    const std::size_t maxval = cur.ReadUnsigned("maxval");
    if (maxval == 0 || maxval > 255) {
      throw PnmError("maxval " + std::to_string(maxval) +
                         " outside supported range 1..255",
                     maxval_at);
    }
    header.maxval = static_cast<unsigned>(maxval);
  }

  if (cur.done()) {
    throw PnmError("unexpected end of data after header", cur.pos());
  }
  if (!IsSpace(cur.Peek())) {
    throw PnmError("expected whitespace before raster", cur.pos());
  }
  cur.Advance();
  header.payload_offset = cur.pos();
  return header;
}

BitImage ReadPbm(std::string_view bytes) {
  const PnmHeader header = ParsePnmHeader(bytes);
  if (header.format != PnmFormat::PlainPbm &&
      header.format != PnmFormat::RawPbm) {
    throw PnmError("not a PBM file", 0);
  }
  BitImage img = [&] {
    try {
      return BitImage::Filled(header.width, header.height, PixelColor::White);
    } catch (const std::exception& e) {
      throw PnmError(e.what(), header.payload_offset);
    }
  }();

  if (header.format == PnmFormat::RawPbm) {
    const std::size_t row_bytes = (header.width + 7) / 8;
    if (header.height > std::numeric_limits<std::size_t>::max() / row_bytes) {
      throw PnmError("raster too large", header.payload_offset);
    }
    RequirePayload(bytes, header.payload_offset, row_bytes * header.height);
    const auto* src =
        reinterpret_cast<const unsigned char*>(bytes.data()) +
        header.payload_offset;
    for (std::size_t y = 0; y < header.height; ++y, src += row_bytes) {
      auto row = img.mutable_row(y);
      std::fill(row.begin(), row.end(), Word{0});
      for (std::size_t i = 0; i < row_bytes; ++i) {
        const Word inverted = static_cast<unsigned char>(~src[i]);
        row[i / 8] |= inverted << (kWordBits - 8 - 8 * (i % 8));
      }
    }
    img.NormalizePadding();
    return img;
  }

  Cursor cur(bytes, header.payload_offset);
  for (std::size_t y = 0; y < header.height; ++y) {
    for (std::size_t x = 0; x < header.width; ++x) {
      cur.SkipSpaceAndComments();
      if (cur.done()) {
        throw PnmError("raster payload truncated at pixel (" +
                           std::to_string(x) + ", " + std::to_string(y) + ")",
                       cur.pos());
      }
      const char c = cur.Peek();
      if (c != '0' && c != '1') {
        throw PnmError(std::string("invalid PBM sample '") + c + "'",
                       cur.pos());
      }
      if (c == '1') img.Set(x, y, PixelColor::Black);
      cur.Advance();
    }
  }
  return img;
}

std::string WritePbm(const BitImage& img, bool raw) {
  std::string out = std::string(raw ? "P4\n" : "P1\n") +
                    std::to_string(img.width()) + " " +
                    std::to_string(img.height()) + "\n";
  if (raw) {
    const std::size_t row_bytes = (img.width() + 7) / 8;
    const unsigned tail = img.width() % 8;
    const auto last_mask =
        static_cast<unsigned char>(tail == 0 ? 0xFF : (0xFF << (8 - tail)));
    out.reserve(out.size() + row_bytes * img.height());
    for (std::size_t y = 0; y < img.height(); ++y) {
      auto row = img.row(y);
      for (std::size_t i = 0; i < row_bytes; ++i) {
        auto byte = static_cast<unsigned char>(
            ~(row[i / 8] >> (kWordBits - 8 - 8 * (i % 8))));
        if (i + 1 == row_bytes) byte &= last_mask;
        out.push_back(static_cast<char>(byte));
      }
    }
    return out;
  }
  out.reserve(out.size() + 2 * img.width() * img.height());
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (x > 0) out.push_back(' ');
      out.push_back(img.Get(x, y) == PixelColor::Black ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

GrayImage ReadPgm(std::string_view bytes) {
  const PnmHeader header = ParsePnmHeader(bytes);
  if (header.format != PnmFormat::PlainPgm &&
      header.format != PnmFormat::RawPgm) {
    throw PnmError("not a PGM file", 0);
  }
  if (header.height > std::numeric_limits<std::size_t>::max() / header.width) {
    throw PnmError("raster too large", header.payload_offset);
  }
  const std::size_t count = header.width * header.height;
  std::vector<std::uint8_t> samples;

  if (header.format == PnmFormat::RawPgm) {
    RequirePayload(bytes, header.payload_offset, count);
    samples.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto v =
          static_cast<unsigned char>(bytes[header.payload_offset + i]);
      if (v > header.maxval) {
        throw PnmError("sample " + std::to_string(v) + " exceeds maxval " +
                           std::to_string(header.maxval),
                       header.payload_offset + i);
      }
      samples[i] = v;
    }
  } else {
    Cursor cur(bytes, header.payload_offset);
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      cur.SkipSpaceAndComments();
      const std::size_t at = cur.pos();
      if (cur.done()) {
        throw PnmError("raster payload truncated after " + std::to_string(i) +
                           " samples",
                       at);
      }
      const std::size_t v = cur.ReadUnsigned("sample");
      if (v > header.maxval) {
        throw PnmError("sample " + std::to_string(v) + " exceeds maxval " +
                           std::to_string(header.maxval),
                       at);
      }
      samples.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return GrayImage(header.width, header.height, std::move(samples));
}

std::string WritePgm(const GrayImage& img, bool raw) {
  std::string out = std::string(raw ? "P5\n" : "P2\n") +
                    std::to_string(img.width()) + " " +
                    std::to_string(img.height()) + "\n255\n";
  if (raw) {
    out.append(reinterpret_cast<const char*>(img.samples().data()),
               img.samples().size());
    return out;
  }
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (x > 0) out.push_back(' ');
      out += std::to_string(img.at(x, y));
    }
    out.push_back('\n');
  }
  return out;
}

std::string ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error(path.string() + ": cannot open for reading: " +
                             std::strerror(errno));
  }
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error(path.string() + ": read failed");
  return bytes;
}

void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error(path.string() + ": cannot open for writing: " +
                             std::strerror(errno));
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace maskedge
