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

#include "fanbp/core.hpp"

namespace fanbp {

/// Per-point quantities of a source at angle beta seen from x. The source
/// sits at r_beta = d (-sin beta, cos beta), so the central ray of the fan
/// is the line through the origin with normal xi_beta.
struct SourceFrame {
  double beta = 0.0;
  double r_beta[2] = {0.0, 0.0};
  double l_beta = 0.0;      // |r_beta - x|
  double gamma_beta = 0.0;  // fan angle of the ray through x
  double u_beta = 0.0;      // (d^2 - r_beta . x) / d^2
  double s_beta = 0.0;      // linear detector height of the ray through x
};

SourceFrame source_frame(double d, double beta, double x1, double x2);

// Pixel-driven O(n^2 N) backprojections. They serve as slow references for
// the Fourier-domain routes.

/// B p(x) = 2 int_0^pi p(x . xi, theta) dtheta (half span) or
/// int_0^2pi p(x . xi, theta) dtheta (full span); Riemann sum in theta,
/// linear interpolation in t.
ImageGrid backproject_parallel(const ParallelSinogram& p, int n);
double backproject_parallel_at(const ParallelSinogram& p, double x1, double x2);

/// B_s w(x) = int_0^2pi w(gamma_beta, beta) / L_beta dbeta. Measured rows are
/// used as-is; the rest of the circle comes from the fan symmetry.
ImageGrid backproject_standard_fan(const StandardFanSinogram& w, int n);
double backproject_standard_fan_at(const StandardFanSinogram& w, double x1, double x2);

/// B_l g(x) = int_0^2pi sqrt(s_beta^2 + d^2) g(s_beta, beta) / (d U_beta) dbeta.
ImageGrid backproject_linear_fan(const LinearFanSinogram& g, int n);
double backproject_linear_fan_at(const LinearFanSinogram& g, double x1, double x2);

}  // namespace fanbp
