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

#include <span>
#include <vector>

#include "fanbp/bessel_backproj.hpp"
#include "fanbp/core.hpp"

namespace fanbp {

/// How the |sigma| multiplier is discretised.
///   spatial            DFT of the band-limited ramp kernel sampled on the
///                      detector grid; convolution is exact on the support
///   frequency_sampled  |sigma| sampled on the padded DFT grid, zero at DC
enum class RampKernel { spatial, frequency_sampled };

struct RampOptions {
  double cutoff_fraction = 1.0;  // of the detector Nyquist frequency, in (0, 1]
  bool cosine_window = false;
  RampKernel kernel = RampKernel::spatial;
};

/// Band-limited ramp kernel h(t) = (1/2pi) int_{|sigma|<c} |sigma| W(sigma) e^{i sigma t} dsigma
/// at t = k step, k = 0..count-1 (the kernel is even).
std::vector<double> ramp_kernel(int count, double step, const RampOptions& options = {});

/// One detector column zero-padded x2 and filtered by |sigma| (angular
/// frequency). Returns the whole padded column; with the frequency-sampled
/// kernel its mean is zero.
std::vector<double> ramp_filter_padded(std::span<const double> column, double step, const RampOptions& options = {});

/// Ramp-filters every angle of p and crops back to the detector grid.
ParallelSinogram ramp_filter(const ParallelSinogram& p, const RampOptions& options = {});

/// f = B q / (4 pi) for a ramp-filtered sinogram q and full-circle B.
double fbp_normalization();

enum class FbpRoute { series, rebin_bst, direct };

struct FbpOptions {
  RampOptions ramp;
  int n_det = 0;   // linear detector samples; 0 selects n
  int n_beta = 0;  // source angles over the short scan; 0 selects n
  FbpRoute route = FbpRoute::series;
  SeriesOptions series;
  double normalization = 0.0;  // 0 selects fbp_normalization()
};

/// ramp_filter -> rebin_to_linear -> linear fan backprojection -> scale.
ImageGrid fbp_linear_pipeline(const ParallelSinogram& p, const FanGeometry& geom, int n, const FbpOptions& options = {});

/// Reconstructs a centred disk of radius 0.5 with unit normalisation and
/// returns the constant that brings its centre to 1.
double calibrate_fbp_normalization(const FanGeometry& geom, int n, const FbpOptions& options = {});

}  // namespace fanbp
