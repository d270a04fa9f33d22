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

#include "maskedge/bench.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <random>
#include <sstream>

#include "maskedge/edge.h"

namespace maskedge {
namespace {

struct Point {
  double x;
  double y;
};

double SegmentDistance(Point p, Point a, Point b) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double t = std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) /
                                  (vx * vx + vy * vy),
                              0.0, 1.0);
  return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

// A three-stroke figure loosely modelled on the Arabic letter Ain: an upper
// hook open to the right, a diagonal neck, and a lower bowl. Coordinates are
// in the unit square; y grows downward.
bool InGlyph(Point p, double half_stroke) {
  constexpr double kPi = 3.14159265358979323846;
  const Point hook{0.58, 0.29};
  const double hook_r = 0.17;
  const double hook_angle = std::atan2(p.y - hook.y, p.x - hook.x);
  if (std::abs(std::hypot(p.x - hook.x, p.y - hook.y) - hook_r) <= half_stroke &&
      std::abs(hook_angle) >= 50.0 * kPi / 180.0) {
    return true;
  }
  if (SegmentDistance(p, {0.56, 0.46}, {0.30, 0.70}) <= half_stroke) {
    return true;
  }
  const Point bowl{0.52, 0.70};
  const double bowl_r = 0.22;
  return std::abs(std::hypot(p.x - bowl.x, p.y - bowl.y) - bowl_r) <=
             half_stroke &&
         p.y >= bowl.y - 0.02;
}

std::string FormatNumber(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

BitImage RunDetector(const Detector& custom,
                     BitImage (*fallback)(const BitImage&, BorderPolicy),
                     const BitImage& img, BorderPolicy border) {
  return custom ? custom(img, border) : fallback(img, border);
}

}  // namespace

std::string_view ShapeName(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::FilledRect:
      return "rect";
    case ShapeKind::Disk:
      return "disk";
    case ShapeKind::RandomNoise:
      return "noise";
    case ShapeKind::Glyph:
      break;
  }
  return "glyph";
}

std::optional<ShapeKind> ParseShapeKind(std::string_view name) {
  for (ShapeKind k : {ShapeKind::FilledRect, ShapeKind::Disk,
                      ShapeKind::RandomNoise, ShapeKind::Glyph}) {
    if (ShapeName(k) == name) return k;
  }
  return std::nullopt;
}

BitImage Generate(const ShapeSpec& spec, std::size_t width,
                  std::size_t height) {
  BitImage img = BitImage::Filled(width, height, PixelColor::White);
  switch (spec.kind) {
    case ShapeKind::FilledRect: {
      const std::size_t rw = spec.rect_width ? spec.rect_width : std::max<std::size_t>(1, width / 2);
      const std::size_t rh = spec.rect_height ? spec.rect_height : std::max<std::size_t>(1, height / 2);
      if (rw > width || rh > height) {
        throw std::invalid_argument("Generate: rectangle exceeds raster");
      }
      const std::size_t x0 = (width - rw) / 2, y0 = (height - rh) / 2;
      for (std::size_t y = y0; y < y0 + rh; ++y) {
        for (std::size_t x = x0; x < x0 + rw; ++x) img.Set(x, y, PixelColor::Black);
      }
      break;
    }
    case ShapeKind::Disk: {
      const std::size_t shorter = std::min(width, height);
      const std::size_t r = spec.radius ? spec.radius : shorter / 3;
      if (2 * r + 1 > shorter) {
        throw std::invalid_argument("Generate: disk exceeds raster");
      }
      const double cx = (static_cast<double>(width) - 1) / 2;
      const double cy = (static_cast<double>(height) - 1) / 2;
      const double r2 = static_cast<double>(r) * static_cast<double>(r);
      for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
          const double dx = static_cast<double>(x) - cx;
          const double dy = static_cast<double>(y) - cy;
          if (dx * dx + dy * dy <= r2) img.Set(x, y, PixelColor::Black);
        }
      }
      break;
    }
    case ShapeKind::RandomNoise: {
      if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
        throw std::invalid_argument("Generate: density outside [0, 1]");
      }
      std::mt19937_64 rng(spec.seed);
      std::bernoulli_distribution black(spec.density);
      for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
          if (black(rng)) img.Set(x, y, PixelColor::Black);
        }
      }
      break;
    }
    case ShapeKind::Glyph: {
      const std::size_t side = std::min(width, height);
      if (side < 8) {
        throw std::invalid_argument("Generate: glyph needs at least 8x8 pixels");
      }
      const double s = static_cast<double>(side);
      const double half_stroke = std::max(0.07, 1.6 / s);
      const std::size_t ox = (width - side) / 2, oy = (height - side) / 2;
      for (std::size_t y = oy; y < oy + side; ++y) {
        for (std::size_t x = ox; x < ox + side; ++x) {
          const Point p{(static_cast<double>(x - ox) + 0.5) / s,
                        (static_cast<double>(y - oy) + 0.5) / s};
          if (InGlyph(p, half_stroke)) img.Set(x, y, PixelColor::Black);
        }
      }
      break;
    }
  }
  return img;
}

Milliseconds MedianTime(const std::function<void()>& fn, std::size_t repeats) {
  return InterleavedMedianTimes({&fn, 1}, repeats).front();
}

std::vector<Milliseconds> InterleavedMedianTimes(
    std::span<const std::function<void()>> fns, std::size_t repeats) {
  if (repeats == 0) throw std::invalid_argument("MedianTime: zero repeats");
  using Clock = std::chrono::steady_clock;
  for (const auto& fn : fns) fn();
  std::vector<std::vector<Milliseconds>> samples(fns.size());
  for (auto& s : samples) s.reserve(repeats);
  for (std::size_t round = 0; round < repeats; ++round) {
    for (std::size_t i = 0; i < fns.size(); ++i) {
      const auto start = Clock::now();
      fns[i]();
      samples[i].push_back(Clock::now() - start);
    }
  }
  std::vector<Milliseconds> medians;
  medians.reserve(fns.size());
  for (auto& s : samples) {
    std::sort(s.begin(), s.end());
    const std::size_t mid = s.size() / 2;
    medians.push_back(s.size() % 2 == 1 ? s[mid] : (s[mid - 1] + s[mid]) / 2.0);
  }
  return medians;
}

MethodMismatchError::MethodMismatchError(std::string label,
                                         std::vector<PixelCoord> diffs,
                                         std::string report)
    : std::runtime_error(std::move(report)),
      label_(std::move(label)),
      diffs_(std::move(diffs)) {}

std::vector<BenchRecord> RunBenchmark(std::span<const BenchCase> cases,
                                      const BenchOptions& options) {
  if (options.repeats < 3) {
    throw std::invalid_argument("RunBenchmark: at least 3 repeats required, got " +
                                std::to_string(options.repeats));
  }
  std::vector<BenchRecord> records;
  records.reserve(cases.size());
  for (const BenchCase& c : cases) {
    const BitImage img = Generate(c.shape, c.width, c.height);
    auto scan = [&] {
      return RunDetector(options.scan, &DetectEdgesScan, img, options.border);
    };
    auto mask = [&] {
      return RunDetector(options.mask, &DetectEdgesMask, img, options.border);
    };

    const BitImage scan_out = scan();
    const BitImage mask_out = mask();
    if (!(scan_out == mask_out)) {
      constexpr std::size_t kReportLimit = 16;
      std::vector<PixelCoord> diffs =
          FindDifferences(scan_out, mask_out, kReportLimit);
      std::ostringstream report;
      report << "methods disagree on '" << c.label << "' (" << c.width << "x"
             << c.height << "); first differing pixels:";
      for (const PixelCoord& d : diffs) {
        report << " (" << d.x << ", " << d.y << ") scan="
               << (scan_out.Get(d.x, d.y) == PixelColor::Black ? "edge" : "-")
               << " mask="
               << (mask_out.Get(d.x, d.y) == PixelColor::Black ? "edge" : "-");
      }
      throw MethodMismatchError(c.label, std::move(diffs), report.str());
    }

    BenchRecord rec;
    rec.label = c.label;
    rec.width = c.width;
    rec.height = c.height;
    rec.repeats = options.repeats;
    rec.scan_time = MedianTime([&] { (void)scan(); }, options.repeats);
    rec.mask_time = MedianTime([&] { (void)mask(); }, options.repeats);
    records.push_back(std::move(rec));
  }
  return records;
}

std::string FormatCsv(std::span<const BenchRecord> records) {
  std::string out = "label,width,height,scan_ms,mask_ms,speedup,repeats\n";
  for (const BenchRecord& r : records) {
    out += r.label + "," + std::to_string(r.width) + "," +
           std::to_string(r.height) + "," + FormatNumber(r.scan_time.count()) +
           "," + FormatNumber(r.mask_time.count()) + "," +
           FormatNumber(r.speedup()) + "," + std::to_string(r.repeats) + "\n";
  }
  return out;
}

std::string FormatTable(std::span<const BenchRecord> records) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "Image" << std::setw(16)
     << "Size in pixels" << std::right << std::setw(22)
     << "Traditional scan (ms)" << std::setw(18) << "Mask method (ms)"
     << std::setw(10) << "Speedup" << std::setw(9) << "Repeats" << "\n";
  for (const BenchRecord& r : records) {
    os << std::left << std::setw(14) << r.label << std::setw(16)
       << (std::to_string(r.width) + " x " + std::to_string(r.height))
       << std::right << std::setw(22) << FormatNumber(r.scan_time.count())
       << std::setw(18) << FormatNumber(r.mask_time.count()) << std::setw(10)
       << FormatNumber(r.speedup()) << std::setw(9) << r.repeats << "\n";
  }
  return os.str();
}

}  // namespace maskedge
