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

#include <filesystem>
#include <istream>
#include <utility>
#include <vector>

#include "fanbp/core.hpp"

namespace fanbp {

/// Constant-density ellipse. `semi_axes.first` lies along the direction
/// `rotation` (radians, counter-clockwise from x1).
struct Ellipse {
  std::pair<double, double> center{0.0, 0.0};
  std::pair<double, double> semi_axes{1.0, 1.0};
  double rotation = 0.0;
  double amplitude = 1.0;
};

using Phantom = std::vector<Ellipse>;

/// Shepp-Logan head (high-contrast amplitudes); fits inside the unit disk.
Phantom default_phantom();

/// Centred disk of the given radius and amplitude 1.
Phantom disk_phantom(double radius = 1.0);

/// Reads one ellipse per line: `cx cy a b rot amp`. Blank lines and text
/// after '#' are ignored. Throws std::runtime_error on malformed lines or
/// ellipses leaving the unit disk.
Phantom parse_phantom(std::istream& in);
Phantom load_phantom(const std::filesystem::path& path);

/// True when the ellipse lies inside the closed unit disk.
bool inside_unit_disk(const Ellipse& e);

/// Sum of amplitudes of the ellipses containing (x1, x2).
double evaluate(const Phantom& phantom, double x1, double x2);

/// Pixel averages over a supersample x supersample grid of sub-pixel
/// centres; supersample = 1 samples the pixel centres only.
ImageGrid rasterize(const Phantom& phantom, int n, int supersample = 4);

/// Exact integral of the phantom along the line x . xi_theta = t.
double line_integral(const Phantom& phantom, double t, double theta);

/// Exact parallel sinogram on the standard [-1,1] x [0,pi) grid.
ParallelSinogram analytic_radon(const Phantom& phantom, int n_t, int n_theta);

/// Integral of the phantom over the plane.
double total_mass(const Phantom& phantom);

}  // namespace fanbp
