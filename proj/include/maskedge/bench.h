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

#ifndef MASKEDGE_BENCH_H_
#define MASKEDGE_BENCH_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maskedge/bit_image.h"

namespace maskedge {

enum class ShapeKind { FilledRect, Disk, RandomNoise, Glyph };

std::string_view ShapeName(ShapeKind kind);
// Accepts "rect", "disk", "noise", "glyph".
std::optional<ShapeKind> ParseShapeKind(std::string_view name);

// Synthetic test figure. Zero-valued sizes pick a default relative to the
// raster: half of each side for rectangles, a third of the short side for
// disk radii.
struct ShapeSpec {
  ShapeKind kind = ShapeKind::Glyph;
  std::size_t rect_width = 0;
  std::size_t rect_height = 0;
  std::size_t radius = 0;
  double density = 0.5;  // probability of black, RandomNoise only
  std::uint64_t seed = 1;
};

// Deterministic for a given spec. Throws std::invalid_argument when the shape
// does not fit the raster or the density is outside [0, 1].
BitImage Generate(const ShapeSpec& spec, std::size_t width, std::size_t height);

using Milliseconds = std::chrono::duration<double, std::milli>;

// Runs `fn` once untimed, then `repeats` times on a monotonic clock, and
// returns the median.
Milliseconds MedianTime(const std::function<void()>& fn, std::size_t repeats);

// Median times of several workloads sampled round-robin: after one warmup of
// each, every round times each workload once. Interference bursts then land
// on all workloads alike instead of skewing one of them.
std::vector<Milliseconds> InterleavedMedianTimes(
    std::span<const std::function<void()>> fns, std::size_t repeats);

struct BenchCase {
  std::string label;
  ShapeSpec shape;
  std::size_t width;
  std::size_t height;
};

// One row of a timing table. Times are medians over `repeats` runs.
struct BenchRecord {
  std::string label;
  std::size_t width = 0;
  std::size_t height = 0;
  Milliseconds scan_time{};
  Milliseconds mask_time{};
  std::size_t repeats = 0;

  double speedup() const { return scan_time / mask_time; }
};

using Detector = std::function<BitImage(const BitImage&, BorderPolicy)>;

struct BenchOptions {
  std::size_t repeats = 5;
  BorderPolicy border = BorderPolicy::WhiteOutside;
  // Empty means DetectEdgesScan / DetectEdgesMask.
  Detector scan{};
  Detector mask{};
};

// The two detectors disagreed on a benchmark input.
class MethodMismatchError : public std::runtime_error {
 public:
  MethodMismatchError(std::string label, std::vector<PixelCoord> diffs,
                      std::string report);
  const std::string& label() const { return label_; }
  const std::vector<PixelCoord>& diffs() const { return diffs_; }

 private:
  std::string label_;
  std::vector<PixelCoord> diffs_;
};

// Verifies both detectors agree on every case, then times them. Throws
// std::invalid_argument for repeats < 3 and MethodMismatchError when the
// outputs differ.
std::vector<BenchRecord> RunBenchmark(std::span<const BenchCase> cases,
                                      const BenchOptions& options = {});

// Columns: label,width,height,scan_ms,mask_ms,speedup,repeats.
std::string FormatCsv(std::span<const BenchRecord> records);
std::string FormatTable(std::span<const BenchRecord> records);

}  // namespace maskedge

#endif  // MASKEDGE_BENCH_H_
