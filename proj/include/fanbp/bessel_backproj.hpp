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
#include <span>
#include <vector>

#include "fanbp/bessel.hpp"
#include "fanbp/bst.hpp"
#include "fanbp/core.hpp"
#include "fanbp/rebinning.hpp"

namespace fanbp {

struct SeriesOptions {
  double eps = 1e-9;
  int gamma_padding = 4;  // periodic fan-angle grid over the Nyquist minimum
  int sigma_padding = 2;
  int space_padding = 2;
  bool deapodize = true;
  DcPolicy dc = DcPolicy::central_ray;
  int n_theta = 0;  // angles over [0, 2pi); 0 selects 2 n_beta
  int n_terms = 0;  // 0 selects choose_truncation
};

/// Fourier coefficients of Z in gamma and their folded combination
///   b_0 = 2 pi c_0,  b_n = 2 pi (c_n + (-1)^n c_{-n}).
/// c holds n = -(n_terms-1)..n_terms-1 per angle.
struct SeriesCoefficients {
  int n_terms = 0;
  int n_theta = 0;
  std::vector<std::complex<double>> c;  // n_theta x (2 n_terms - 1)
  std::vector<std::complex<double>> b;  // n_theta x n_terms

  std::complex<double> c_at(int j, int n) const {
    return c[static_cast<std::size_t>(j) * (2 * n_terms - 1) + (n + n_terms - 1)];
  }
  std::complex<double> b_at(int j, int n) const { return b[static_cast<std::size_t>(j) * n_terms + n]; }
};

/// Smallest power of two >= padding * 2 pi / gamma_step.
int periodic_grid_size(double gamma_step, int padding);

/// Coefficients of Z sampled on the periodic grid gamma_m = 2 pi m / grid_size
/// (rows are angles). c_n = (1/grid_size) sum_m Z_m e^{-i n gamma_m}.
SeriesCoefficients coefficients_from_periodic(std::span<const std::complex<double>> z, int grid_size, int n_theta,
                                              int n_terms);

/// Embeds each row of Z (zero outside the fan) into a periodic grid padded by
/// `padding_factor` and returns its coefficients. n_terms <= 0 keeps half the
/// periodic grid.
SeriesCoefficients fourier_coefficients_gamma(const ShearedSinogram& z, int padding_factor, int n_terms = 0);

/// S(theta_j, sigma_k) = sum_n b_n(theta_j) J_n(d sigma_k), row-major
/// n_theta x n_sigma. The sum is one dense matrix product.
std::vector<std::complex<double>> evaluate_series(const SeriesCoefficients& coeffs, const BesselTable& table);

/// Parameters the series route settled on for one input.
struct SeriesInfo {
  int n_terms = 0;
  int grid_size = 0;
  int n_theta = 0;
  double sigma_max = 0.0;
};

/// Polar spectrum int Z(gamma, theta) e^{-i d sigma sin gamma} dgamma of the
/// sheared data Z(gamma, theta) = z(gamma, theta - gamma).
PolarSpectrum fan_series_spectrum(const StandardFanSinogram& z, const SeriesOptions& options = {},
                                  SeriesInfo* info = nullptr);

/// Standard fan backprojection as a Bessel-Neumann series in the polar
/// frequency domain.
ImageGrid standard_fan_backproject(const StandardFanSinogram& w, int n, const SeriesOptions& options = {},
                                   SeriesInfo* info = nullptr);

/// Linear fan backprojection: z = tau L g, then the standard series.
ImageGrid linear_fan_backproject(const LinearFanSinogram& g, int n, const SeriesOptions& options = {},
                                 SeriesInfo* info = nullptr);

/// Mean of the beta = 0 projection (trapezoid rule over the detector).
double estimate_dc(const StandardFanSinogram& w);
double estimate_dc(const LinearFanSinogram& g);

}  // namespace fanbp
