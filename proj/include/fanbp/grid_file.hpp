// Copyright 2026 The fanbp Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fanbp/core.hpp"

namespace fanbp {

/// Binary 2D array with axis metadata.
///   "TOMOGRD1" | u32 dtype | u32 rows | u32 cols | f64 axis0 min, max |
///   f64 axis1 min, max | rows*cols f64 row-major
/// All fields little-endian. Axis 0 runs along rows.
struct GridFile {
  static constexpr std::uint32_t kFloat64 = 1;

  std::uint32_t dtype = kFloat64;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  double axis0_min = 0.0;
  double axis0_max = 0.0;
  double axis1_min = 0.0;
  double axis1_max = 0.0;
  std::vector<double> data;
};

/// Throws std::runtime_error on I/O failure or a malformed file.
void write_grid(const std::filesystem::path& path, const GridFile& grid);
GridFile read_grid(const std::filesystem::path& path);

/// What a GridFile holds, judged from its axis metadata.
enum class GridKind { image, parallel, standard_fan, linear_fan, unknown };

/// `d` is needed to tell the fan kinds apart; pass 0 when it is unknown.
GridKind classify(const GridFile& grid, double d);

GridFile to_grid(const ImageGrid& img);
GridFile to_grid(const ParallelSinogram& p);
GridFile to_grid(const StandardFanSinogram& w);
GridFile to_grid(const LinearFanSinogram& g);

ImageGrid image_from_grid(const GridFile& grid);
ParallelSinogram parallel_from_grid(const GridFile& grid);
/// Fan sinograms are checked against the geometry of distance d.
StandardFanSinogram standard_from_grid(const GridFile& grid, double d);
LinearFanSinogram linear_from_grid(const GridFile& grid, double d);

/// 8-bit binary PGM (P5), min-max scaled.
void write_pgm(const std::filesystem::path& path, const ImageGrid& img);

/// CSV with a leading x1 column and one column per named profile.
void write_profile_csv(const std::filesystem::path& path, const std::vector<double>& x,
                       const std::vector<std::string>& names, const std::vector<std::vector<double>>& profiles);

}  // namespace fanbp
