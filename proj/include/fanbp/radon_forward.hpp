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

// Forward fan-beam data is produced by resampling a parallel sinogram:
//   standard: w(gamma, beta) = p(D sin gamma, beta + gamma)
//   linear:   g(s, beta)     = p(s D / sqrt(s^2 + D^2), beta + atan(s / D))
// Off-grid parallel samples are bilinearly interpolated; rays missing the
// unit disk read as zero.

/// Standard fan sinogram on [-gamma_max, gamma_max] x [0, beta_extent).
/// A non-positive `beta_extent` selects the short-scan span.
StandardFanSinogram rebin_to_standard(const ParallelSinogram& p, const FanGeometry& geom, int n_gamma, int n_beta,
                                      double beta_extent = 0.0);

/// Linear fan sinogram on [-s_max, s_max] x [0, beta_extent).
LinearFanSinogram rebin_to_linear(const ParallelSinogram& p, const FanGeometry& geom, int n_s, int n_beta,
                                  double beta_extent = 0.0);

}  // namespace fanbp
