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

#include "fanbp/bessel_backproj.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "fanbp/backproj_reference.hpp"
#include "fanbp/sampling.hpp"
#include "fft.hpp"

namespace fanbp {

using cplx = std::complex<double>;

int periodic_grid_size(double gamma_step, int padding) {
  if (!(gamma_step > 0.0) || padding < 1) throw std::invalid_argument("invalid periodic grid request");
  const double need = padding * kTwoPi / gamma_step;
  int m = 1;
  while (m < need) m *= 2;
  return m;
}

namespace {

// FFT of one periodic row in place, then c_n and b_n for n < n_terms.
void fold_row(std::span<cplx> buf, int n_terms, cplx* c_row, cplx* b_row) {
  const int m = static_cast<int>(buf.size());
  const double inv = 1.0 / m;
  auto coef = [&](int n) { return buf[((n % m) + m) % m] * inv; };
  if (c_row) {
    for (int n = -(n_terms - 1); n < n_terms; ++n) c_row[n + n_terms - 1] = coef(n);
  }
  b_row[0] = kTwoPi * coef(0);
  for (int n = 1; n < n_terms; ++n) b_row[n] = kTwoPi * (coef(n) + (n % 2 ? -1.0 : 1.0) * coef(-n));
}

// Linear interpolation of a fan-angle row onto gamma_m = 2 pi m / M,
// wrapped to [-pi, pi); zero outside the fan.
void embed_row(std::span<const double> row, double gamma_max, double gamma_step, std::span<cplx> buf) {
  std::fill(buf.begin(), buf.end(), cplx{});
  const int m = static_cast<int>(buf.size());
  const double dg = kTwoPi / m;
  const int reach = static_cast<int>(std::ceil(gamma_max / dg));
  for (int q = -reach; q <= reach; ++q) {
    buf[(q + m) % m] = interpolate_uniform(row, -gamma_max, gamma_step, q * dg);
  }
}

void check_terms(int n_terms, int grid_size) {
  if (n_terms < 1) throw std::invalid_argument("n_terms must be positive");
  if (n_terms > grid_size / 2) throw std::invalid_argument("n_terms exceeds half the periodic grid");
}

}  // namespace

SeriesCoefficients coefficients_from_periodic(std::span<const cplx> z, int grid_size, int n_theta, int n_terms) {
  if (static_cast<std::size_t>(grid_size) * n_theta != z.size()) throw std::invalid_argument("periodic data size mismatch");
  check_terms(n_terms, grid_size);
  SeriesCoefficients out;
  out.n_terms = n_terms;
  out.n_theta = n_theta;
  out.c.assign(static_cast<std::size_t>(n_theta) * (2 * n_terms - 1), cplx{});
  out.b.assign(static_cast<std::size_t>(n_theta) * n_terms, cplx{});
  const detail::Fft1d fft(grid_size, detail::FftDirection::forward);
#pragma omp parallel
  {
    std::vector<cplx> buf(grid_size);
#pragma omp for
    for (int j = 0; j < n_theta; ++j) {
      std::copy_n(z.begin() + static_cast<std::ptrdiff_t>(j) * grid_size, grid_size, buf.begin());
      fft.execute(buf);
      fold_row(buf, n_terms, &out.c[static_cast<std::size_t>(j) * (2 * n_terms - 1)],
               &out.b[static_cast<std::size_t>(j) * n_terms]);
    }
  }
  return out;
}

SeriesCoefficients fourier_coefficients_gamma(const ShearedSinogram& z, int padding_factor, int n_terms) {
  const int m = periodic_grid_size(z.gamma_step(), padding_factor);
  if (n_terms <= 0) n_terms = m / 2;
  std::vector<cplx> periodic(static_cast<std::size_t>(m) * z.n_theta());
  std::vector<double> row(z.n_gamma());
  for (int j = 0; j < z.n_theta(); ++j) {
    for (int i = 0; i < z.n_gamma(); ++i) row[i] = z(j, i);
    embed_row(row, z.gamma_max(), z.gamma_step(), {periodic.data() + static_cast<std::size_t>(j) * m, static_cast<std::size_t>(m)});
  }
  return coefficients_from_periodic(periodic, m, z.n_theta(), n_terms);
}

std::vector<cplx> evaluate_series(const SeriesCoefficients& coeffs, const BesselTable& table) {
  if (coeffs.n_terms > table.n_terms) throw std::invalid_argument("Bessel table shorter than the series");
  const int nt = coeffs.n_theta;
  const int nk = coeffs.n_terms;
  const int ns = table.n_sigma();
  Eigen::MatrixXd stacked(2 * nt, nk);
  for (int j = 0; j < nt; ++j) {
    for (int n = 0; n < nk; ++n) {
      stacked(j, n) = coeffs.b_at(j, n).real();
      stacked(nt + j, n) = coeffs.b_at(j, n).imag();
    }
  }
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> bessel(table.values.data(), nk, ns);
  const Eigen::MatrixXd prod = stacked * bessel;
  std::vector<cplx> out(static_cast<std::size_t>(nt) * ns);
  for (int j = 0; j < nt; ++j) {
    for (int k = 0; k < ns; ++k) out[static_cast<std::size_t>(j) * ns + k] = {prod(j, k), prod(nt + j, k)};
  }
  return out;
}

PolarSpectrum fan_series_spectrum(const StandardFanSinogram& z, const SeriesOptions& options, SeriesInfo* info) {
  const FanGeometry& geom = z.geometry();
  const int n_theta = options.n_theta > 0 ? options.n_theta : 2 * z.n_beta();
  const double dgamma = z.det_step();
  const SigmaGrid grid = make_sigma_grid(z.n_det(), geom.d * dgamma, options.sigma_padding);
  const int m = periodic_grid_size(dgamma, options.gamma_padding);

  int n_terms = options.n_terms;
  if (n_terms <= 0) {
    const int nyquist = static_cast<int>(std::ceil(kPi / dgamma));
    n_terms = choose_truncation(geom, grid.sigma_max(), options.eps, nyquist);
  }
  n_terms = std::min(n_terms, m / 2);

  PolarSpectrum out(grid.count(), n_theta, grid.sigma_max());
  std::vector<double> sigmas(grid.count());
  for (int k = 0; k < grid.count(); ++k) sigmas[k] = out.sigma(k);
  const BesselTable table = bessel_table(geom, n_terms, sigmas);

  ShearedSinogram sheared = shear_to_theta(z, n_theta);
  if (options.deapodize) {
    for (int i = 0; i < sheared.n_gamma(); ++i) {
      const double weight = deapodization(geom.d * std::sin(sheared.gamma(i)), grid.sigma_step());
      for (int j = 0; j < n_theta; ++j) sheared(j, i) *= weight;
    }
  }

  const detail::Fft1d fft(m, detail::FftDirection::forward);
  constexpr int kBlock = 128;
  for (int j0 = 0; j0 < n_theta; j0 += kBlock) {
    const int nb = std::min(kBlock, n_theta - j0);
    SeriesCoefficients block;
    block.n_terms = n_terms;
    block.n_theta = nb;
    block.b.assign(static_cast<std::size_t>(nb) * n_terms, cplx{});
#pragma omp parallel
    {
      std::vector<cplx> buf(m);
      std::vector<double> row(sheared.n_gamma());
#pragma omp for
      for (int jj = 0; jj < nb; ++jj) {
        for (int i = 0; i < sheared.n_gamma(); ++i) row[i] = sheared(j0 + jj, i);
        embed_row(row, sheared.gamma_max(), sheared.gamma_step(), buf);
        fft.execute(buf);
        fold_row(buf, n_terms, nullptr, &block.b[static_cast<std::size_t>(jj) * n_terms]);
      }
    }
    const auto values = evaluate_series(block, table);
    for (int jj = 0; jj < nb; ++jj) {
      for (int k = 0; k < grid.count(); ++k) out(j0 + jj, k) = values[static_cast<std::size_t>(jj) * grid.count() + k];
    }
  }

  if (info) *info = {n_terms, m, n_theta, grid.sigma_max()};
  return out;
}

namespace {

BstOptions bst_options(const SeriesOptions& o) {
  BstOptions b;
  b.sigma_padding = o.sigma_padding;
  b.space_padding = o.space_padding;
  b.deapodize = o.deapodize;
  b.dc = o.dc;
  return b;
}

}  // namespace

ImageGrid standard_fan_backproject(const StandardFanSinogram& w, int n, const SeriesOptions& options, SeriesInfo* info) {
  double dc = 0.0;
  if (options.dc == DcPolicy::central_ray) dc = backproject_standard_fan_at(w, 0.0, 0.0);
  if (options.dc == DcPolicy::projection_mean) dc = projection_mass(w) / kPi;
  return backproject_from_polar(fan_series_spectrum(w, options, info), n, bst_options(options), dc);
}

ImageGrid linear_fan_backproject(const LinearFanSinogram& g, int n, const SeriesOptions& options, SeriesInfo* info) {
  const StandardFanSinogram z = apply_tau(linear_to_standard(g, g.n_det()));
  double dc = 0.0;
  if (options.dc == DcPolicy::central_ray) dc = backproject_linear_fan_at(g, 0.0, 0.0);
  if (options.dc == DcPolicy::projection_mean) dc = projection_mass(g) / kPi;
  return backproject_from_polar(fan_series_spectrum(z, options, info), n, bst_options(options), dc);
}

namespace {

template <FanKind Kind>
double row_mean(const FanSinogram<Kind>& w) {
  if (w.values().empty()) throw std::invalid_argument("empty sinogram");
  const auto row = w.row(0);
  const int n = w.n_det();
  if (n == 1) return row[0];
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += (i == 0 || i == n - 1 ? 0.5 : 1.0) * row[i];
  return acc / (n - 1);
}

}  // namespace

double estimate_dc(const StandardFanSinogram& w) { return row_mean(w); }
double estimate_dc(const LinearFanSinogram& g) { return row_mean(g); }

}  // namespace fanbp
