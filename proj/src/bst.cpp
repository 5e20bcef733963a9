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

#include "fanbp/bst.hpp"

#include <cmath>
#include <stdexcept>

#include "fanbp/backproj_reference.hpp"
#include "fanbp/rebinning.hpp"
#include "fft.hpp"

namespace fanbp {

using cplx = std::complex<double>;

SigmaGrid make_sigma_grid(int n_det, double step, int padding) {
  if (padding < 1) throw std::invalid_argument("sigma padding must be >= 1");
  int length = padding * n_det;
  if (length % 2) ++length;
  return {length, step};
}

double deapodization(double t, double sigma_step) {
  const double x = 0.5 * t * sigma_step;
  if (std::abs(x) < 1e-8) return 1.0;
  const double s = std::sin(x) / x;
  return 1.0 / (s * s);
}

PolarSpectrum parallel_spectrum(const ParallelSinogram& p, const BstOptions& options) {
  const SigmaGrid grid = make_sigma_grid(p.n_t(), p.t_step(), options.sigma_padding);
  const bool half = p.span() == AngularSpan::half;
  const int n_theta = half ? 2 * p.n_theta() : p.n_theta();
  PolarSpectrum out(grid.count(), n_theta, grid.sigma_max());

  std::vector<double> weight(p.n_t(), 1.0);
  if (options.deapodize) {
    for (int k = 0; k < p.n_t(); ++k) weight[k] = deapodization(p.t(k), grid.sigma_step());
  }
  std::vector<cplx> shift(grid.count());
  for (int m = 0; m < grid.count(); ++m) shift[m] = p.t_step() * std::polar(1.0, grid.sigma_step() * m);  // t_0 = -1

  const detail::Fft1d fft(grid.length, detail::FftDirection::forward);
#pragma omp parallel
  {
    std::vector<cplx> buf(grid.length);
#pragma omp for
    for (int j = 0; j < p.n_theta(); ++j) {
      std::fill(buf.begin(), buf.end(), cplx{});
      const auto row = p.row(j);
      for (int k = 0; k < p.n_t(); ++k) buf[k] = row[k] * weight[k];
      fft.execute(buf);
      for (int m = 0; m < grid.count(); ++m) {
        out(j, m) = shift[m] * buf[m];
        if (half) out(j + p.n_theta(), m) = std::conj(out(j, m));
      }
    }
  }
  return out;
}

CartesianSpectrum polar_to_cartesian(const PolarSpectrum& spectrum, int size, double length) {
  CartesianSpectrum raw{size, length, std::vector<cplx>(static_cast<std::size_t>(size) * size)};
  const double ds = spectrum.sigma_step();
  const double dtheta = spectrum.theta_step();
  const int ns = spectrum.n_sigma();
  const int nt = spectrum.n_theta();
  const double smax = spectrum.sigma_max();

#pragma omp parallel for
  for (int r = 0; r < size; ++r) {
    const double w2 = raw.omega(r);
    for (int c = 0; c < size; ++c) {
      const double w1 = raw.omega(c);
      const double sigma = std::hypot(w1, w2);
      if (sigma > smax * (1.0 + 1e-12) || ns < 2) {
        raw(r, c) = (sigma == 0.0 && ns >= 1) ? spectrum(0, 0) : cplx{};
        continue;
      }
      double ps = sigma / ds;
      int k0 = static_cast<int>(ps);
      if (k0 >= ns - 1) k0 = ns - 2;
      const double fs = ps - k0;
      double phi = std::atan2(w2, w1);
      if (phi < 0.0) phi += kTwoPi;
      const double pt = phi / dtheta;
      int j0 = static_cast<int>(pt);
      if (j0 >= nt) j0 = nt - 1;
      const double ft = pt - j0;
      const int j1 = (j0 + 1) % nt;
      raw(r, c) = (1.0 - ft) * ((1.0 - fs) * spectrum(j0, k0) + fs * spectrum(j0, k0 + 1)) +
                  ft * ((1.0 - fs) * spectrum(j1, k0) + fs * spectrum(j1, k0 + 1));
    }
  }

  CartesianSpectrum out{size, length, std::vector<cplx>(raw.data.size())};
  for (int r = 0; r < size; ++r) {
    const int rr = (size - r) % size;
    for (int c = 0; c < size; ++c) {
      const int cc = (size - c) % size;
      // The -K/2 row and column have no partner frequency; keeping them would
      // break the mirror symmetry of the image.
      out(r, c) = (r == 0 || c == 0) ? cplx{} : 0.5 * (raw(r, c) + std::conj(raw(rr, cc)));
    }
  }
  return out;
}

ImageGrid backproject_from_polar(const PolarSpectrum& numerator, int n, const BstOptions& options, double dc_value) {
  if (n < 1) throw std::invalid_argument("image size must be positive");
  if (options.space_padding < 1) throw std::invalid_argument("space padding must be >= 1");
  int size = options.space_padding * n;
  if (size % 2) ++size;
  const double h = 2.0 / n;
  const double length = size * h;
  CartesianSpectrum f = polar_to_cartesian(numerator, size, length);

  cplx origin{};
  for (int r = 0; r < size; ++r) {
    const double w2 = f.omega(r);
    for (int c = 0; c < size; ++c) {
      const double w = std::hypot(f.omega(c), w2);
      f(r, c) = w > 0.0 ? f(r, c) * (2.0 * kTwoPi / w) : cplx{};
      origin += f(r, c);
    }
  }
  const double origin_value = origin.real() / (length * length);

  // Pixel m of the padded grid sits at (m - a - n/2 + 1/2) h, so the centre
  // block m = a..a+n-1 lands on the image grid.
  const int a = (size - n) / 2;
  const double s = -a - 0.5 * n + 0.5;
  std::vector<cplx> phase(size);
  for (int q = 0; q < size; ++q) phase[q] = std::polar(1.0, kTwoPi * (q - size / 2) * s / size);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) f(r, c) *= phase[r] * phase[c];
  }
  const detail::Fft2d fft(size, size, detail::FftDirection::backward);
  fft.execute(f.data);

  ImageGrid img(n);
  const double scale = 1.0 / (length * length);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int m2 = i + a;
      const int m1 = j + a;
      const double sign = ((m1 + m2) % 2) ? -1.0 : 1.0;
      img(i, j) = sign * f(m2, m1).real() * scale;
    }
  }

  double offset = 0.0;
  if (options.dc == DcPolicy::central_ray) {
    offset = dc_value - origin_value;
  } else if (options.dc == DcPolicy::projection_mean) {
    double sum = 0.0;
    int count = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (std::hypot(img.coord(i), img.coord(j)) < 1.0) {
          sum += img(i, j);
          ++count;
        }
      }
    }
    if (count > 0) offset = dc_value - sum / count;
  }
  if (offset != 0.0) {
    for (double& v : img.values()) v += offset;
  }
  return img;
}

namespace {

template <typename F>
double trapezoid(int count, double step, F&& f) {
  double acc = 0.0;
  for (int i = 0; i < count; ++i) acc += (i == 0 || i == count - 1 ? 0.5 : 1.0) * f(i);
  return acc * step;
}

}  // namespace

double projection_mass(const ParallelSinogram& p) {
  const auto row = p.row(0);
  return trapezoid(p.n_t(), p.t_step(), [&](int k) { return row[k]; });
}

double projection_mass(const StandardFanSinogram& w) {
  const double d = w.geometry().d;
  const auto row = w.row(0);
  return trapezoid(w.n_det(), w.det_step(), [&](int i) { return row[i] * d * std::cos(w.det(i)); });
}

double projection_mass(const LinearFanSinogram& g) {
  const double d = g.geometry().d;
  const auto row = g.row(0);
  return trapezoid(g.n_det(), g.det_step(), [&](int i) {
    const double q = d * d + g.det(i) * g.det(i);
    return row[i] * d * d * d / (q * std::sqrt(q));
  });
}

ImageGrid bst_backproject(const ParallelSinogram& p, int n, const BstOptions& options) {
  double dc = 0.0;
  if (options.dc == DcPolicy::central_ray) dc = backproject_parallel_at(p, 0.0, 0.0);
  if (options.dc == DcPolicy::projection_mean) dc = projection_mass(p) / kPi;
  return backproject_from_polar(parallel_spectrum(p, options), n, options, dc);
}

ImageGrid bst_backproject_standard_fan(const StandardFanSinogram& w, int n, const BstOptions& options) {
  const ParallelSinogram p = adjoint_rebin_standard(w, w.n_det(), 2 * w.n_beta());
  double dc = 0.0;
  if (options.dc == DcPolicy::central_ray) dc = backproject_standard_fan_at(w, 0.0, 0.0);
  if (options.dc == DcPolicy::projection_mean) dc = projection_mass(w) / kPi;
  return backproject_from_polar(parallel_spectrum(p, options), n, options, dc);
}

ImageGrid bst_backproject_linear_fan(const LinearFanSinogram& g, int n, const BstOptions& options) {
  const ParallelSinogram p = adjoint_rebin_linear(g, g.n_det(), 2 * g.n_beta());
  double dc = 0.0;
  if (options.dc == DcPolicy::central_ray) dc = backproject_linear_fan_at(g, 0.0, 0.0);
  if (options.dc == DcPolicy::projection_mean) dc = projection_mass(g) / kPi;
  return backproject_from_polar(parallel_spectrum(p, options), n, options, dc);
}

}  // namespace fanbp
