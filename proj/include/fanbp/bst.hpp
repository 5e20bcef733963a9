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

#include <complex>
#include <vector>

#include "fanbp/core.hpp"

namespace fanbp {

/// How the zero-frequency content, lost to the 1/sigma kernel, is restored.
///   none            leave the box mean at zero
///   central_ray     shift so the image at the origin equals the exact
///                   backprojection there (an O(N) sum over one point)
///   projection_mean shift so the mean inside the unit disk equals the object
///                   mass, estimated from one projection, over pi
enum class DcPolicy { none, central_ray, projection_mean };

struct BstOptions {
  int sigma_padding = 2;  // zero padding along the detector before the 1D FFT
  int space_padding = 2;  // Cartesian frequency grid is space_padding * n wide
  bool deapodize = true;  // undo the radial attenuation of linear interpolation
  DcPolicy dc = DcPolicy::central_ray;
};

/// Frequency grid shared by the detector transforms: sigma_k = 2 pi k / (len * step),
/// k = 0..len/2, with len = padding * n_det.
struct SigmaGrid {
  int length = 0;  // padded transform length
  double step = 0.0;  // detector sample spacing (parallel units)
  int count() const { return length / 2 + 1; }
  double sigma_step() const { return kTwoPi / (length * step); }
  double sigma_max() const { return (count() - 1) * sigma_step(); }
};

SigmaGrid make_sigma_grid(int n_det, double step, int padding);

/// 1 / sinc^2(t dsigma / 2): compensates the attenuation of linear
/// interpolation with spacing dsigma for content at detector position t.
double deapodization(double t, double sigma_step);

/// N(sigma, theta) = int p(t, theta) e^{-i t sigma} dt on [0, sigma_max] x [0, 2pi).
/// Half-span input is extended with N(sigma, theta + pi) = conj N(sigma, theta).
PolarSpectrum parallel_spectrum(const ParallelSinogram& p, const BstOptions& options = {});

/// Centred K x K grid of frequencies omega = 2 pi (k - K/2) / length.
/// Row index runs along omega_2, column index along omega_1.
struct CartesianSpectrum {
  int size = 0;
  double length = 0.0;
  std::vector<std::complex<double>> data;

  std::complex<double>& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * size + c]; }
  std::complex<double> operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * size + c]; }
  double omega(int index) const { return kTwoPi * (index - size / 2) / length; }
};

/// Bilinear polar -> Cartesian resampling of `spectrum` onto a K x K grid of
/// physical extent `length`. Zero beyond sigma_max; F(k) and conj F(-k) are
/// averaged so the inverse transform is real.
CartesianSpectrum polar_to_cartesian(const PolarSpectrum& spectrum, int size, double length);

/// Applies 4 pi / |omega| to the resampled numerator spectrum (zero at DC),
/// inverts it onto the n x n image grid and restores the DC according to
/// options.dc. `dc_value` is the origin value (central_ray) or the disk mean
/// (projection_mean).
ImageGrid backproject_from_polar(const PolarSpectrum& numerator, int n, const BstOptions& options, double dc_value);

/// Object mass int f dx read off the first projection (trapezoid rule with
/// the Jacobian of the detector coordinate).
double projection_mass(const ParallelSinogram& p);
double projection_mass(const StandardFanSinogram& w);
double projection_mass(const LinearFanSinogram& g);

/// Parallel backprojection through the Backprojection Slice Theorem.
ImageGrid bst_backproject(const ParallelSinogram& p, int n, const BstOptions& options = {});

/// Two-step fan routes: adjoint rebinning onto a full-circle parallel grid
/// (n_det detector samples, 2 n_beta angles), then bst_backproject. The DC
/// anchor is taken from the fan data directly.
ImageGrid bst_backproject_standard_fan(const StandardFanSinogram& w, int n, const BstOptions& options = {});
ImageGrid bst_backproject_linear_fan(const LinearFanSinogram& g, int n, const BstOptions& options = {});

}  // namespace fanbp
