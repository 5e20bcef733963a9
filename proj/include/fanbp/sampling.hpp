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

#include <cmath>
#include <span>

#include "fanbp/core.hpp"

namespace fanbp {

/// Linear interpolation on the uniform grid origin + k*step, k = 0..n-1.
/// Zero outside the sampled interval.
inline double interpolate_uniform(std::span<const double> samples, double origin, double step, double x) {
  const double pos = (x - origin) / step;
  const int n = static_cast<int>(samples.size());
  if (!(pos >= -1e-9) || pos > n - 1 + 1e-9) return 0.0;
  int k = static_cast<int>(pos);
  if (k >= n - 1) return samples[n - 1];
  if (k < 0) k = 0;
  const double f = pos - k;
  return (1.0 - f) * samples[k] + f * samples[k + 1];
}

/// Wraps an angle into [0, 2pi).
inline double wrap_two_pi(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

/// Bilinear sample of p at an arbitrary (t, theta). Angles are reduced to
/// the stored span; for half-span data the evenness p(t,theta) =
/// p(-t,theta+pi) supplies the other half of the circle.
double sample(const ParallelSinogram& p, double t, double theta);

/// Bilinear sample of a fan sinogram at detector coordinate u and any
/// source angle beta. Angles outside the measured range are mapped to
/// their symmetry partner (-u, beta + 2 gamma(u) + pi); the few rays whose
/// partner is also unmeasured are interpolated periodically across the gap.
template <FanKind Kind>
double sample(const FanSinogram<Kind>& w, double u, double beta);

extern template double sample(const StandardFanSinogram&, double, double);
extern template double sample(const LinearFanSinogram&, double, double);

}  // namespace fanbp
