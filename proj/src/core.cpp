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

#include "fanbp/core.hpp"

#include <cmath>
#include <string>

#include <omp.h>

#include "fanbp/sampling.hpp"

namespace fanbp {

FanGeometry make_fan_geometry(double d) {
  if (!(d > 1.0) || !std::isfinite(d)) {
    throw InvalidGeometry("source-origin distance must exceed 1 (got " + std::to_string(d) + ")");
  }
  FanGeometry g;
  g.d = d;
  g.s_max = d / std::sqrt(d * d - 1.0);
  g.gamma_max = std::asin(1.0 / d);
  g.beta_span = kPi + 2.0 * g.gamma_max;
  return g;
}

ImageGrid::ImageGrid(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("image size must be positive");
  data_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

ImageGrid::ImageGrid(int n, std::vector<double> data) : n_(n), data_(std::move(data)) {
  if (n < 1 || data_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("image data length must equal n*n");
  }
}

ParallelSinogram::ParallelSinogram(int n_t, int n_theta, AngularSpan span)
    : n_t_(n_t), n_theta_(n_theta), span_(span) {
  if (n_t < 2 || n_theta < 1) throw std::invalid_argument("parallel sinogram needs n_t >= 2 and n_theta >= 1");
  data_.assign(static_cast<std::size_t>(n_t) * n_theta, 0.0);
}

template <FanKind Kind>
FanSinogram<Kind>::FanSinogram(const FanGeometry& geometry, int n_det, int n_beta)
    : FanSinogram(geometry, n_det, n_beta, geometry.beta_span) {}

template <FanKind Kind>
FanSinogram<Kind>::FanSinogram(const FanGeometry& geometry, int n_det, int n_beta, double beta_extent)
    : geometry_(geometry), n_det_(n_det), n_beta_(n_beta), beta_extent_(beta_extent) {
  if (!(geometry.d > 1.0)) throw InvalidGeometry("fan sinogram needs a geometry with d > 1");
  if (n_det < 2 || n_beta < 1) throw std::invalid_argument("fan sinogram needs n_det >= 2 and n_beta >= 1");
  if (!(beta_extent >= geometry.beta_span - 1e-12) || beta_extent > kTwoPi + 1e-12) {
    throw std::invalid_argument("beta extent must lie in [pi + 2 gamma_max, 2 pi]");
  }
  data_.assign(static_cast<std::size_t>(n_det) * n_beta, 0.0);
}

template <FanKind Kind>
double FanSinogram<Kind>::fan_angle(double u) const {
  if constexpr (Kind == FanKind::standard) {
    return u;
  } else {
    return std::atan(u / geometry_.d);
  }
}

template class FanSinogram<FanKind::standard>;
template class FanSinogram<FanKind::linear>;

PolarSpectrum::PolarSpectrum(int n_sigma, int n_theta, double sigma_max)
    : n_sigma_(n_sigma), n_theta_(n_theta), sigma_max_(sigma_max) {
  if (n_sigma < 1 || n_theta < 1 || !(sigma_max >= 0.0)) {
    throw std::invalid_argument("polar spectrum needs positive sizes and sigma_max >= 0");
  }
  data_.assign(static_cast<std::size_t>(n_sigma) * n_theta, {0.0, 0.0});
}

void set_thread_count(int threads) {
  omp_set_num_threads(threads > 0 ? threads : omp_get_num_procs());
}

int thread_count() { return omp_get_max_threads(); }

// ---------------------------------------------------------------------------
// sampling

double sample(const ParallelSinogram& p, double t, double theta) {
  const double dtheta = p.theta_step();
  double a = wrap_two_pi(theta);
  const double t0 = -1.0;
  const double dt = p.t_step();
  const int n = p.n_theta();

  if (p.span() == AngularSpan::full) {
    const double pos = a / dtheta;
    int j0 = static_cast<int>(pos);
    if (j0 >= n) j0 = n - 1;
    const double f = pos - j0;
    const int j1 = (j0 + 1) % n;
    return (1.0 - f) * interpolate_uniform(p.row(j0), t0, dt, t) +
           f * interpolate_uniform(p.row(j1), t0, dt, t);
  }

  if (a >= kPi) {
    a -= kPi;
    t = -t;
  }
  const double pos = a / dtheta;
  int j0 = static_cast<int>(pos);
  if (j0 >= n) j0 = n - 1;
  const double f = pos - j0;
  const double v0 = interpolate_uniform(p.row(j0), t0, dt, t);
  if (f == 0.0) return v0;
  // Row n is row 0 seen from the opposite side.
  const double v1 = j0 + 1 < n ? interpolate_uniform(p.row(j0 + 1), t0, dt, t)
                               : interpolate_uniform(p.row(0), t0, dt, -t);
  return (1.0 - f) * v0 + f * v1;
}

namespace {

template <FanKind Kind>
double sample_measured(const FanSinogram<Kind>& w, double u, double beta) {
  const double pos = beta / w.beta_step();
  const int n = w.n_beta();
  int j0 = static_cast<int>(pos);
  if (j0 > n - 1) j0 = n - 1;
  const double f = pos - j0;
  const double v0 = interpolate_uniform(w.row(j0), -w.det_max(), w.det_step(), u);
  if (f <= 1e-12 || j0 + 1 >= n) return v0;
  return (1.0 - f) * v0 + f * interpolate_uniform(w.row(j0 + 1), -w.det_max(), w.det_step(), u);
}

}  // namespace

template <FanKind Kind>
double sample(const FanSinogram<Kind>& w, double u, double beta) {
  if (std::abs(u) > w.det_max() * (1.0 + 1e-12)) return 0.0;
  const double b = wrap_two_pi(beta);
  const int n = w.n_beta();
  const double dbeta = w.beta_step();
  const double det0 = -w.det_max();
  const double ddet = w.det_step();

  if (w.full_circle()) {
    const double pos = b / dbeta;
    int j0 = static_cast<int>(pos);
    if (j0 >= n) j0 = n - 1;
    const double f = pos - j0;
    const int j1 = (j0 + 1) % n;
    return (1.0 - f) * interpolate_uniform(w.row(j0), det0, ddet, u) +
           f * interpolate_uniform(w.row(j1), det0, ddet, u);
  }

  const double last = (n - 1) * dbeta;
  if (b <= last + 1e-12) return sample_measured(w, u, b);

  const double partner = wrap_two_pi(b + 2.0 * w.fan_angle(u) + kPi);
  if (partner <= last + 1e-12) return sample_measured(w, -u, partner);

  // Neither the ray nor its partner was measured: bridge the gap between the
  // last row and row 0 (= beta of 2 pi).
  const double f = (b - last) / (kTwoPi - last);
  return (1.0 - f) * interpolate_uniform(w.row(n - 1), det0, ddet, u) +
         f * interpolate_uniform(w.row(0), det0, ddet, u);
}

template double sample(const StandardFanSinogram&, double, double);
template double sample(const LinearFanSinogram&, double, double);

}  // namespace fanbp
