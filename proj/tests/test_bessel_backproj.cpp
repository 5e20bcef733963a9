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

#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "fanbp/backproj_reference.hpp"
#include "fanbp/bessel_backproj.hpp"
#include "fanbp/phantom.hpp"
#include "fanbp/radon_forward.hpp"
#include "test_support.hpp"

using namespace fanbp;
using namespace fanbp::testing;
using cplx = std::complex<double>;

namespace {

std::vector<cplx> periodic(int m, const std::function<cplx(double)>& f) {
  std::vector<cplx> z(m);
  for (int k = 0; k < m; ++k) z[k] = f(kTwoPi * k / m);
  return z;
}

}  // namespace

TEST_CASE("periodic grid size") {
  CHECK(periodic_grid_size(kTwoPi / 100, 1) == 128);
  CHECK(periodic_grid_size(kTwoPi / 128, 1) == 128);
  CHECK(periodic_grid_size(kTwoPi / 100, 4) == 512);
  CHECK_THROWS(periodic_grid_size(0.0, 4));
}

TEST_CASE("coefficients of elementary fields") {
  const int m = 64;
  const auto k = coefficients_from_periodic(periodic(m, [](double) { return cplx{3.0, 0.0}; }), m, 1, 8);
  CHECK(std::abs(k.c_at(0, 0) - 3.0) < 1e-14);
  CHECK(std::abs(k.b_at(0, 0) - kTwoPi * 3.0) < 1e-13);
  for (int n = 1; n < 8; ++n) {
    CHECK(std::abs(k.c_at(0, n)) < 1e-14);
    CHECK(std::abs(k.c_at(0, -n)) < 1e-14);
    CHECK(std::abs(k.b_at(0, n)) < 1e-13);
  }

  const auto c = coefficients_from_periodic(periodic(m, [](double g) { return cplx{std::cos(g), 0.0}; }), m, 1, 8);
  CHECK(std::abs(c.c_at(0, 1) - 0.5) < 1e-14);
  CHECK(std::abs(c.c_at(0, -1) - 0.5) < 1e-14);
  CHECK(std::abs(c.b_at(0, 1)) < 1e-13);  // 2 pi (1/2 - 1/2)

  const auto s = coefficients_from_periodic(periodic(m, [](double g) { return cplx{std::sin(g), 0.0}; }), m, 1, 8);
  CHECK(std::abs(s.b_at(0, 1) - cplx{0.0, -kTwoPi}) < 1e-13);
  // int sin(g) e^{-i x sin g} dg = -2 pi i J_1(x)
  const FanGeometry geo = make_fan_geometry(10.0);
  const BesselTable t = bessel_table(geo, 8, std::vector<double>{0.3});
  const auto v = evaluate_series(s, t);
  CHECK(std::abs(v[0] - cplx{0.0, -kTwoPi * std::cyl_bessel_j(1.0, 3.0)}) < 1e-13);

  // the folding uses c_{-n}, not conj(c_n): the two differ for complex Z
  const auto e = coefficients_from_periodic(periodic(m, [](double g) { return std::polar(1.0, -2.0 * g); }), m, 1, 8);
  CHECK(std::abs(e.b_at(0, 2) - kTwoPi) < 1e-13);
  CHECK_THROWS(coefficients_from_periodic(periodic(m, [](double) { return cplx{}; }), m, 1, 33));
}

TEST_CASE("series equals quadrature for complex fields") {
  const FanGeometry g = make_fan_geometry(10.0);
  const int m = 256, n_theta = 3, band = 20;
  std::mt19937 rng(5);
  std::normal_distribution<double> gauss;
  std::vector<std::vector<cplx>> coef(n_theta, std::vector<cplx>(2 * band + 1));
  for (auto& row : coef) {
    for (auto& a : row) a = {gauss(rng), gauss(rng)};
  }
  auto field = [&](int j, double gamma) {
    cplx acc{};
    for (int n = -band; n <= band; ++n) acc += coef[j][n + band] * std::polar(1.0, n * gamma);
    return acc;
  };
  std::vector<cplx> z(static_cast<std::size_t>(m) * n_theta);
  double zmax = 0.0;
  for (int j = 0; j < n_theta; ++j) {
    for (int k = 0; k < m; ++k) {
      z[j * m + k] = field(j, kTwoPi * k / m);
      zmax = std::max(zmax, std::abs(z[j * m + k]));
    }
  }
  std::vector<double> sigmas;
  for (int k = 0; k <= 16; ++k) sigmas.push_back(0.25 * k);
  const int terms = choose_truncation(g, sigmas.back(), 1e-9);
  const auto coeffs = coefficients_from_periodic(z, m, n_theta, terms);
  const auto series = evaluate_series(coeffs, bessel_table(g, terms, sigmas));
  const int fine = 4096;
  for (int j = 0; j < n_theta; ++j) {
    for (std::size_t k = 0; k < sigmas.size(); ++k) {
      cplx q{};
      for (int i = 0; i < fine; ++i) {
        const double gamma = kTwoPi * i / fine;
        q += field(j, gamma) * std::polar(1.0, -g.d * sigmas[k] * std::sin(gamma));
      }
      q *= kTwoPi / fine;
      CHECK(std::abs(series[j * sigmas.size() + k] - q) < 1e-9 * zmax * kTwoPi);
    }
  }
}

TEST_CASE("coefficients of sheared fan data") {
  ShearedSinogram z(65, 2, 0.1);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 65; ++i) z(j, i) = 1.0;
  }
  const auto c = fourier_coefficients_gamma(z, 4, 16);
  // c_0 is the fan width over 2 pi
  CHECK(c.c_at(0, 0).real() == doctest::Approx(0.2 / kTwoPi).epsilon(1e-3));
  CHECK(c.c_at(1, 3).real() == doctest::Approx(std::sin(0.3) / (3 * kPi)).epsilon(1e-2));
}

TEST_CASE("series backprojection against the direct oracles") {
  const FanGeometry g = make_fan_geometry(10.0);
  const ParallelSinogram p = analytic_radon(default_phantom(), 96, 96);
  const StandardFanSinogram w = rebin_to_standard(p, g, 96, 96);
  const LinearFanSinogram l = rebin_to_linear(p, g, 96, 96);
  SeriesInfo info;
  const ImageGrid s = standard_fan_backproject(w, 96, {}, &info);
  CHECK(info.n_theta == 192);
  CHECK(info.n_terms <= info.grid_size / 2);
  CHECK(info.n_terms >= static_cast<int>(std::ceil(kPi / w.det_step())));
  CHECK(rel_l2_disk(s, backproject_standard_fan(w, 96)) < 0.05);
  CHECK(rel_l2_disk(linear_fan_backproject(l, 96), backproject_linear_fan(l, 96)) < 0.05);
  CHECK(rel_l2_disk(s, bst_backproject_standard_fan(w, 96)) < 0.05);
}

TEST_CASE("series backprojection is linear and maps zero to zero") {
  const FanGeometry g = make_fan_geometry(10.0);
  const EvenField u(1), v(2);
  const LinearFanSinogram a = sample_linear(u, g, 48, 48, g.beta_span);
  const LinearFanSinogram b = sample_linear(v, g, 48, 48, g.beta_span);
  LinearFanSinogram c = a;
  for (std::size_t k = 0; k < c.values().size(); ++k) c.values()[k] = 1.5 * a.values()[k] + 3.0 * b.values()[k];
  const ImageGrid ia = linear_fan_backproject(a, 32), ib = linear_fan_backproject(b, 32), ic = linear_fan_backproject(c, 32);
  double scale = 0.0;
  for (double x : ic.values()) scale = std::max(scale, std::abs(x));
  for (std::size_t k = 0; k < ic.values().size(); ++k) {
    CHECK(std::abs(ic.values()[k] - 1.5 * ia.values()[k] - 3.0 * ib.values()[k]) < 1e-10 * scale);
  }
  const LinearFanSinogram zero(g, 48, 48);
  const ImageGrid iz = linear_fan_backproject(zero, 32);
  for (double x : iz.values()) CHECK(x == 0.0);
  const StandardFanSinogram zs(g, 48, 48);
  const ImageGrid izs = standard_fan_backproject(zs, 32);
  for (double x : izs.values()) CHECK(x == 0.0);
}

TEST_CASE("DC estimate from the first projection") {
  const FanGeometry g = make_fan_geometry(10.0);
  LinearFanSinogram c(g, 33, 10);
  CHECK(estimate_dc(c) == 0.0);
  for (double& x : c.values()) x = 0.7;
  CHECK(estimate_dc(c) == doctest::Approx(0.7));
  StandardFanSinogram cs(g, 33, 10);
  for (double& x : cs.values()) x = -2.0;
  CHECK(estimate_dc(cs) == doctest::Approx(-2.0));

  // unit disk: (1 / 2 s_max) int g(s, 0) ds by fine midpoint quadrature
  const LinearFanSinogram disk = rebin_to_linear(analytic_radon(disk_phantom(1.0), 4097, 8), g, 2049, 8);
  const int m = 200000;
  double acc = 0.0;
  for (int k = 0; k < m; ++k) {
    const double s = -g.s_max + (k + 0.5) * 2.0 * g.s_max / m;
    const double t = s * g.d / std::hypot(s, g.d);
    acc += 2.0 * std::sqrt(std::max(0.0, 1.0 - t * t));
  }
  CHECK(estimate_dc(disk) == doctest::Approx(acc / m).epsilon(1e-4));
}
