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

#include "fanbp/filtering.hpp"

#include <cmath>
#include <stdexcept>

#include "fanbp/backproj_reference.hpp"
#include "fanbp/phantom.hpp"
#include "fanbp/radon_forward.hpp"
#include "fft.hpp"

namespace fanbp {

using cplx = std::complex<double>;

namespace {

void check_ramp(const RampOptions& o) {
  if (!(o.cutoff_fraction > 0.0 && o.cutoff_fraction <= 1.0)) throw std::invalid_argument("cutoff fraction must lie in (0, 1]");
}

std::vector<double> ramp_multiplier(int length, double step, const RampOptions& o) {
  std::vector<double> h(length);
  if (o.kernel == RampKernel::spatial) {
    const auto k = ramp_kernel(length / 2 + 1, step, o);
    std::vector<cplx> buf(length);
    for (int m = 0; m < length; ++m) buf[m] = step * k[m <= length / 2 ? m : length - m];
    const detail::Fft1d fft(length, detail::FftDirection::forward);
    fft.execute(buf);
    for (int m = 0; m < length; ++m) h[m] = buf[m].real() / length;
    return h;
  }
  const double cutoff = o.cutoff_fraction * kPi / step;
  for (int m = 0; m < length; ++m) {
    const int k = m <= length / 2 ? m : m - length;
    const double sigma = std::abs(kTwoPi * k / (length * step));
    double v = sigma <= cutoff * (1.0 + 1e-12) ? sigma : 0.0;
    if (o.cosine_window && v > 0.0) v *= std::cos(0.5 * kPi * sigma / cutoff);
    h[m] = v / length;
  }
  return h;
}

void filter_in_place(std::vector<cplx>& buf, const std::vector<double>& h, const detail::Fft1d& fwd,
                     const detail::Fft1d& bwd) {
  fwd.execute(buf);
  for (std::size_t m = 0; m < buf.size(); ++m) buf[m] *= h[m];
  bwd.execute(buf);
}

}  // namespace

std::vector<double> ramp_kernel(int count, double step, const RampOptions& options) {
  check_ramp(options);
  const double c = options.cutoff_fraction * kPi / step;
  std::vector<double> h(count);
  if (!options.cosine_window) {
    for (int k = 0; k < count; ++k) {
      const double t = k * step;
      const double ct = c * t;
      h[k] = k == 0 ? c * c / kTwoPi : (c * std::sin(ct) / t + (std::cos(ct) - 1.0) / (t * t)) / kPi;
    }
    return h;
  }
  // Windowed kernel by composite Simpson quadrature over [0, c]; the grid
  // resolves the fastest oscillation with >= 8 points per period.
  int panels = 8 * std::max(count, 16);
  if (panels % 2) ++panels;
  const double ds = c / panels;
  for (int k = 0; k < count; ++k) {
    const double t = k * step;
    double acc = 0.0;
    for (int q = 0; q <= panels; ++q) {
      const double s = q * ds;
      const double f = s * std::cos(0.5 * kPi * s / c) * std::cos(s * t);
      acc += (q == 0 || q == panels ? 1.0 : (q % 2 ? 4.0 : 2.0)) * f;
    }
    h[k] = acc * ds / 3.0 / kPi;
  }
  return h;
}

std::vector<double> ramp_filter_padded(std::span<const double> column, double step, const RampOptions& options) {
  check_ramp(options);
  const int length = 2 * static_cast<int>(column.size());
  const auto h = ramp_multiplier(length, step, options);
  const detail::Fft1d fwd(length, detail::FftDirection::forward);
  const detail::Fft1d bwd(length, detail::FftDirection::backward);
  std::vector<cplx> buf(length);
  std::copy(column.begin(), column.end(), buf.begin());
  filter_in_place(buf, h, fwd, bwd);
  std::vector<double> out(length);
  for (int m = 0; m < length; ++m) out[m] = buf[m].real();
  return out;
}

ParallelSinogram ramp_filter(const ParallelSinogram& p, const RampOptions& options) {
  check_ramp(options);
  const int n_t = p.n_t();
  const int length = 2 * n_t;
  const auto h = ramp_multiplier(length, p.t_step(), options);
  const detail::Fft1d fwd(length, detail::FftDirection::forward);
  const detail::Fft1d bwd(length, detail::FftDirection::backward);
  ParallelSinogram out(n_t, p.n_theta(), p.span());
#pragma omp parallel
  {
    std::vector<cplx> buf(length);
#pragma omp for
    for (int j = 0; j < p.n_theta(); ++j) {
      std::fill(buf.begin(), buf.end(), cplx{});
      const auto row = p.row(j);
      std::copy(row.begin(), row.end(), buf.begin());
      filter_in_place(buf, h, fwd, bwd);
      for (int k = 0; k < n_t; ++k) out(j, k) = buf[k].real();
    }
  }
  return out;
}

double fbp_normalization() { return 1.0 / (2.0 * kTwoPi); }

ImageGrid fbp_linear_pipeline(const ParallelSinogram& p, const FanGeometry& geom, int n, const FbpOptions& options) {
  if (n < 1) throw std::invalid_argument("image size must be positive");
  const int n_det = options.n_det > 0 ? options.n_det : n;
  const int n_beta = options.n_beta > 0 ? options.n_beta : n;
  const LinearFanSinogram g = rebin_to_linear(ramp_filter(p, options.ramp), geom, n_det, n_beta);
  ImageGrid img;
  switch (options.route) {
    case FbpRoute::series:
      img = linear_fan_backproject(g, n, options.series);
      break;
    case FbpRoute::rebin_bst: {
      BstOptions b;
      b.sigma_padding = options.series.sigma_padding;
      b.space_padding = options.series.space_padding;
      b.deapodize = options.series.deapodize;
      b.dc = options.series.dc;
      img = bst_backproject_linear_fan(g, n, b);
      break;
    }
    case FbpRoute::direct:
      img = backproject_linear_fan(g, n);
      break;
  }
  const double c = options.normalization > 0.0 ? options.normalization : fbp_normalization();
  for (double& v : img.values()) v *= c;
  return img;
}

double calibrate_fbp_normalization(const FanGeometry& geom, int n, const FbpOptions& options) {
  const int n_t = options.n_det > 0 ? options.n_det : n;
  const int n_theta = options.n_beta > 0 ? options.n_beta : n;
  const ParallelSinogram p = analytic_radon(disk_phantom(0.5), n_t, n_theta);
  FbpOptions raw = options;
  raw.normalization = 1.0;
  const ImageGrid img = fbp_linear_pipeline(p, geom, n, raw);
  // Average the four pixels around the origin (the grid has no centre pixel
  // for even n).
  const int c = n / 2;
  const double centre = n % 2 ? img(c, c) : 0.25 * (img(c - 1, c - 1) + img(c - 1, c) + img(c, c - 1) + img(c, c));
  if (centre == 0.0) throw std::runtime_error("calibration disk reconstructed to zero");
  return 1.0 / centre;
}

}  // namespace fanbp
