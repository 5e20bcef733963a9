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

#include "fanbp/backproj_reference.hpp"
#include "fanbp/bst.hpp"
#include "fanbp/phantom.hpp"
#include "fanbp/radon_forward.hpp"
#include "test_support.hpp"

using namespace fanbp;
using namespace fanbp::testing;

TEST_CASE("zero data give a zero image") {
  const ParallelSinogram p(33, 32);
  for (DcPolicy dc : {DcPolicy::none, DcPolicy::central_ray, DcPolicy::projection_mean}) {
    BstOptions o;
    o.dc = dc;
    const ImageGrid img = bst_backproject(p, 16, o);
    for (double x : img.values()) CHECK(x == 0.0);
  }
}

TEST_CASE("detector spectrum against a direct Fourier sum") {
  const EvenField v(2);
  const ParallelSinogram p = sample_parallel(v, 17, 6, AngularSpan::half);
  BstOptions o;
  o.deapodize = false;
  const PolarSpectrum s = parallel_spectrum(p, o);
  CHECK(s.n_theta() == 12);
  CHECK(s.n_sigma() == 17 + 1);
  CHECK(s.sigma_max() == doctest::Approx(kPi / p.t_step()));
  for (int j = 0; j < 6; ++j) {
    for (int m = 0; m < s.n_sigma(); ++m) {
      std::complex<double> acc{};
      for (int k = 0; k < p.n_t(); ++k) acc += p(j, k) * std::polar(1.0, -s.sigma(m) * p.t(k));
      acc *= p.t_step();
      CHECK(std::abs(s(j, m) - acc) < 1e-12);
      CHECK(std::abs(s(j + 6, m) - std::conj(acc)) < 1e-12);
    }
  }
  CHECK(deapodization(0.0, 1.0) == 1.0);
  CHECK(deapodization(1.0, 2.0) == doctest::Approx(1.0 / std::pow(std::sin(1.0), 2)));
}

TEST_CASE("polar to Cartesian resampling") {
  PolarSpectrum constant(11, 16, 5.0);
  for (auto& x : constant.values()) x = {2.0, 0.0};
  const CartesianSpectrum c = polar_to_cartesian(constant, 16, 4.0);
  for (int r = 0; r < 16; ++r) {
    for (int k = 0; k < 16; ++k) {
      const double w = std::hypot(c.omega(r), c.omega(k));
      // the unpaired -K/2 edge is dropped
      if (r == 0 || k == 0) CHECK(c(r, k) == std::complex<double>{});
      else if (w <= 5.0) CHECK(std::abs(c(r, k) - 2.0) < 1e-12);
      if (w > 5.0 + 1e-9) CHECK(std::abs(c(r, k)) == 0.0);
    }
  }

  PolarSpectrum random(21, 24, 6.0);
  std::mt19937 rng(4);
  std::normal_distribution<double> g;
  for (auto& x : random.values()) x = {g(rng), g(rng)};
  const CartesianSpectrum h = polar_to_cartesian(random, 20, 5.0);
  for (int r = 0; r < 20; ++r) {
    for (int k = 0; k < 20; ++k) CHECK(std::abs(h(r, k) - std::conj(h((20 - r) % 20, (20 - k) % 20))) < 1e-12);
  }

  // ring at sigma_8 = 8 * 0.3
  PolarSpectrum ring(21, 32, 6.0);
  for (int j = 0; j < 32; ++j) ring(j, 8) = 1.0;
  const CartesianSpectrum rc = polar_to_cartesian(ring, 64, 12.0);
  double peak_w = 0.0, peak = 0.0;
  for (int r = 0; r < 64; ++r) {
    for (int k = 0; k < 64; ++k) {
      const double w = std::hypot(rc.omega(r), rc.omega(k));
      if (std::abs(rc(r, k)) > 0.0) CHECK(std::abs(w - 2.4) < 0.3 + 1e-9);
      if (std::abs(rc(r, k)) > peak) {
        peak = std::abs(rc(r, k));
        peak_w = w;
      }
    }
  }
  CHECK(std::abs(peak_w - 2.4) < 2.0 * kTwoPi / 12.0);
}

TEST_CASE("unit disk backprojection is radially symmetric") {
  const ParallelSinogram p = analytic_radon(disk_phantom(1.0), 65, 64);
  const ImageGrid b = bst_backproject(p, 32);
  const int n = 32;
  double top = -1e300;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      CHECK(b(i, j) == doctest::Approx(b(j, i)).epsilon(1e-6));
      CHECK(b(i, j) == doctest::Approx(b(n - 1 - i, j)).epsilon(1e-6));
      top = std::max(top, b(i, j));
    }
  }
  // even n: the four pixels around the origin share the maximum
  CHECK(top == doctest::Approx(b(n / 2, n / 2)).epsilon(1e-9));
  CHECK(b(n / 2 - 1, n / 2 - 1) == doctest::Approx(b(n / 2, n / 2)).epsilon(1e-9));
}

TEST_CASE("BST agrees with the pixel-driven backprojection") {
  const Phantom ph = random_phantom(17);
  const ParallelSinogram p = analytic_radon(ph, 128, 128);
  const ImageGrid fast = bst_backproject(p, 128);
  const ImageGrid slow = backproject_parallel(p, 128);
  CHECK(rel_l2_disk(fast, slow) < 0.05);
  CHECK(fast(64, 64) == doctest::Approx(slow(64, 64)).epsilon(0.02));
}

TEST_CASE("BST is linear") {
  const ParallelSinogram a = analytic_radon(random_phantom(1), 64, 48);
  const ParallelSinogram b = analytic_radon(random_phantom(2), 64, 48);
  ParallelSinogram c = a;
  for (std::size_t k = 0; k < c.values().size(); ++k) c.values()[k] = 2.0 * a.values()[k] - 0.5 * b.values()[k];
  const ImageGrid ia = bst_backproject(a, 40), ib = bst_backproject(b, 40), ic = bst_backproject(c, 40);
  double scale = 0.0;
  for (double x : ic.values()) scale = std::max(scale, std::abs(x));
  for (std::size_t k = 0; k < ic.values().size(); ++k) {
    CHECK(std::abs(ic.values()[k] - (2.0 * ia.values()[k] - 0.5 * ib.values()[k])) < 1e-10 * scale);
  }
}

TEST_CASE("DC policies") {
  const ParallelSinogram p = analytic_radon(default_phantom(), 64, 64);
  BstOptions none, centre, mean;
  none.dc = DcPolicy::none;
  mean.dc = DcPolicy::projection_mean;
  const ImageGrid a = bst_backproject(p, 32, none);
  const ImageGrid b = bst_backproject(p, 32, centre);
  const double shift = b(0, 0) - a(0, 0);
  for (std::size_t k = 0; k < a.values().size(); ++k) CHECK(b.values()[k] - a.values()[k] == doctest::Approx(shift));
  // centre-ray anchor: the four central pixels straddle the exact origin value
  const double centre4 = 0.25 * (b(15, 15) + b(15, 16) + b(16, 15) + b(16, 16));
  CHECK(centre4 == doctest::Approx(backproject_parallel_at(p, 0.0, 0.0)).epsilon(0.02));

  const PolarSpectrum s = parallel_spectrum(p, mean);
  const ImageGrid c = backproject_from_polar(s, 32, mean, 0.37);
  double sum = 0.0;
  int count = 0;
  for (int i = 0; i < 32; ++i) {
    for (int j = 0; j < 32; ++j) {
      if (std::hypot(c.coord(i), c.coord(j)) < 1.0) {
        sum += c(i, j);
        ++count;
      }
    }
  }
  CHECK(sum / count == doctest::Approx(0.37).epsilon(1e-12));
  CHECK(projection_mass(p) == doctest::Approx(total_mass(default_phantom())).epsilon(1e-3));
}

TEST_CASE("two-step fan routes agree with the direct fan backprojections") {
  const FanGeometry g = make_fan_geometry(10.0);
  const ParallelSinogram p = analytic_radon(default_phantom(), 128, 128);
  const StandardFanSinogram w = rebin_to_standard(p, g, 128, 128);
  const LinearFanSinogram l = rebin_to_linear(p, g, 128, 128);
  CHECK(rel_l2_disk(bst_backproject_standard_fan(w, 128), backproject_standard_fan(w, 128)) < 0.05);
  CHECK(rel_l2_disk(bst_backproject_linear_fan(l, 128), backproject_linear_fan(l, 128)) < 0.05);
  CHECK(projection_mass(w) == doctest::Approx(total_mass(default_phantom())).epsilon(1e-2));
  CHECK(projection_mass(l) == doctest::Approx(total_mass(default_phantom())).epsilon(1e-2));
}
