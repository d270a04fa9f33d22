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

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <map>
#include <optional>

#include "maskedge/bench.h"
#include "maskedge/binarize.h"
#include "maskedge/edge.h"
#include "maskedge/pnm.h"

namespace maskedge::cli {
namespace {

// Failure that maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, BorderPolicy> kBorders = {
    {"white", BorderPolicy::WhiteOutside}, {"black", BorderPolicy::BlackOutside}};

BitImage LoadPbm(const std::string& path) {
  const std::string bytes = ReadFileBytes(path);
  try {
    return ReadPbm(bytes);
  } catch (const PnmError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

GrayImage LoadPgm(const std::string& path) {
  const std::string bytes = ReadFileBytes(path);
  try {
    return ReadPgm(bytes);
  } catch (const PnmError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct DetectArgs {
  std::string input;
  std::string output;
  std::string method = "mask";
  BorderPolicy border = BorderPolicy::WhiteOutside;
  bool raw_output = true;
};

int Detect(const DetectArgs& a) {
  const BitImage img = LoadPbm(a.input);
  const BitImage edges = a.method == "scan" ? DetectEdgesScan(img, a.border)
                                            : DetectEdgesMask(img, a.border);
  WriteFileBytes(a.output, WritePbm(edges, a.raw_output));
  return kExitOk;
}

struct CompareArgs {
  std::string input;
  BorderPolicy border = BorderPolicy::WhiteOutside;
  std::vector<std::size_t> flip;  // test hook: corrupt one mask-method pixel
};

int Compare(const CompareArgs& a, std::ostream& out) {
  const BitImage img = LoadPbm(a.input);
  const BitImage scan = DetectEdgesScan(img, a.border);
  BitImage mask = DetectEdgesMask(img, a.border);
  if (!a.flip.empty()) {
    const std::size_t x = a.flip[0], y = a.flip[1];
    if (x >= mask.width() || y >= mask.height()) {
      throw UsageError("--flip-mask-pixel outside the image");
    }
    mask.Set(x, y, Flip(mask.Get(x, y)));
  }
  const auto diffs = FindDifferences(scan, mask);
  if (diffs.empty()) {
    out << "MATCH\n";
    return kExitOk;
  }
  out << "MISMATCH at (" << diffs.front().x << ", " << diffs.front().y
      << ")\n";
  return kExitMismatch;
}

struct BenchArgs {
  std::vector<std::size_t> sizes = {50, 100, 300, 1024};
  std::string shape = "glyph";
  double density = 0.5;
  std::size_t repeats = 5;
  std::uint64_t seed = 1;
  BorderPolicy border = BorderPolicy::WhiteOutside;
  std::string csv;
};

int Bench(BenchArgs a, std::ostream& out) {
  if (a.repeats < 3) {
    throw UsageError("--repeats must be at least 3");
  }
  std::sort(a.sizes.begin(), a.sizes.end());
  std::vector<BenchCase> cases;
  for (std::size_t n : a.sizes) {
    if (n < 8) throw UsageError("--sizes entries must be at least 8");
    ShapeSpec spec;
    spec.kind = *ParseShapeKind(a.shape);
    spec.density = a.density;
    spec.seed = a.seed;
    cases.push_back({a.shape + std::to_string(n), spec, n, n});
  }
  std::vector<BenchRecord> records;
  try {
    records = RunBenchmark(cases, {.repeats = a.repeats, .border = a.border});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << FormatTable(records);
  if (!a.csv.empty()) WriteFileBytes(a.csv, FormatCsv(records));
  return kExitOk;
}

struct BinarizeArgs {
  std::string input;
  std::string output;
  std::optional<int> threshold;
  bool otsu = false;
  bool raw_output = true;
};

int Binarize(const BinarizeArgs& a, std::ostream& out) {
  if (!a.otsu && !a.threshold) {
    throw UsageError("binarize needs one of --threshold or --otsu");
  }
  const GrayImage gray = LoadPgm(a.input);
  std::uint8_t t = 0;
  if (a.otsu) {
    t = OtsuThreshold(gray);
    out << "threshold: " << static_cast<int>(t) << "\n";
  } else {
    t = static_cast<std::uint8_t>(*a.threshold);
  }
  WriteFileBytes(a.output, WritePbm(Threshold(gray, t), a.raw_output));
  return kExitOk;
}

int Info(const std::string& input, std::ostream& out) {
  const BitImage img = LoadPbm(input);
  out << "width: " << img.width() << "\nheight: " << img.height()
      << "\nblack: " << CountBlack(img) << "\n";
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Edge detection of binary images by the method of masks",
               "maskedge"};
  app.require_subcommand(1);

  DetectArgs detect;
  auto* detect_cmd = app.add_subcommand("detect", "Write the edge image of a PBM");
  detect_cmd->add_option("--input", detect.input, "Input PBM")->required();
  detect_cmd->add_option("--output", detect.output, "Output PBM")->required();
  detect_cmd->add_option("--method", detect.method, "mask or scan")
      ->check(CLI::IsMember({"mask", "scan"}))
      ->capture_default_str();
  detect_cmd->add_option("--border", detect.border, "Outside color: white or black")
      ->transform(CLI::CheckedTransformer(kBorders));
  detect_cmd->add_option("--raw-output", detect.raw_output,
                         "Write P4 (true) or P1 (false)")
      ->capture_default_str();

  CompareArgs compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Check that both detectors agree on a PBM");
  compare_cmd->add_option("--input", compare.input, "Input PBM")->required();
  compare_cmd->add_option("--border", compare.border, "Outside color: white or black")
      ->transform(CLI::CheckedTransformer(kBorders));
  compare_cmd->add_option("--flip-mask-pixel", compare.flip)
      ->expected(2)
      ->delimiter(',')
      ->group("");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time both detectors");
  bench_cmd->add_option("--sizes", bench.sizes, "Square image sides")
      ->delimiter(',');
  bench_cmd->add_option("--shape", bench.shape, "glyph, rect, disk or noise")
      ->check(CLI::IsMember({"glyph", "rect", "disk", "noise"}))
      ->capture_default_str();
  bench_cmd->add_option("--density", bench.density, "Black probability for noise")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--repeats", bench.repeats, "Timed runs per method")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Noise seed");
  bench_cmd->add_option("--border", bench.border, "Outside color: white or black")
      ->transform(CLI::CheckedTransformer(kBorders));
  bench_cmd->add_option("--csv", bench.csv, "Also write results as CSV");

  BinarizeArgs binarize;
  auto* binarize_cmd =
      app.add_subcommand("binarize", "Threshold a PGM into a PBM");
  binarize_cmd->add_option("--input", binarize.input, "Input PGM")->required();
  binarize_cmd->add_option("--output", binarize.output, "Output PBM")->required();
  auto* threshold_opt =
      binarize_cmd
          ->add_option("--threshold", binarize.threshold,
                       "Samples >= threshold become white")
          ->check(CLI::Range(0, 255));
  auto* otsu_opt =
      binarize_cmd->add_flag("--otsu", binarize.otsu, "Pick the threshold by Otsu's method");
  threshold_opt->excludes(otsu_opt);
  binarize_cmd->add_option("--raw-output", binarize.raw_output,
                           "Write P4 (true) or P1 (false)");

  std::string info_input;
  auto* info_cmd = app.add_subcommand("info", "Print dimensions and black-pixel count");
  info_cmd->add_option("--input", info_input, "Input PBM")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*detect_cmd) return Detect(detect);
    if (*compare_cmd) return Compare(compare, out);
    if (*bench_cmd) return Bench(bench, out);
    if (*binarize_cmd) return Binarize(binarize, out);
    return Info(info_input, out);
  } catch (const MethodMismatchError& e) {
    err << "maskedge: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "maskedge: error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace maskedge::cli
