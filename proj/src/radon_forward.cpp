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

#include "fanbp/radon_forward.hpp"

#include <cmath>

#include "fanbp/sampling.hpp"

namespace fanbp {

StandardFanSinogram rebin_to_standard(const ParallelSinogram& p, const FanGeometry& geom, int n_gamma, int n_beta,
                                      double beta_extent) {
  StandardFanSinogram w(geom, n_gamma, n_beta, beta_extent > 0.0 ? beta_extent : geom.beta_span);
#pragma omp parallel for
  for (int j = 0; j < n_beta; ++j) {
    const double beta = w.beta(j);
    for (int i = 0; i < n_gamma; ++i) {
      const double gamma = w.det(i);
      w(j, i) = sample(p, geom.d * std::sin(gamma), beta + gamma);
    }
  }
  return w;
}

LinearFanSinogram rebin_to_linear(const ParallelSinogram& p, const FanGeometry& geom, int n_s, int n_beta,
                                  double beta_extent) {
  LinearFanSinogram g(geom, n_s, n_beta, beta_extent > 0.0 ? beta_extent : geom.beta_span);
  const double d = geom.d;
#pragma omp parallel for
  for (int j = 0; j < n_beta; ++j) {
    const double beta = g.beta(j);
    for (int i = 0; i < n_s; ++i) {
      const double s = g.det(i);
      const double t = s * d / std::sqrt(s * s + d * d);
      g(j, i) = sample(p, t, beta + std::atan(s / d));
    }
  }
  return g;
}

}  // namespace fanbp
