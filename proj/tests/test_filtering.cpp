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

#include "fanbp/filtering.hpp"
#include "fanbp/phantom.hpp"
#include "test_support.hpp"

using namespace fanbp;
using namespace fanbp::testing;

TEST_CASE("ramp kills constants") {
  ParallelSinogram p(65, 4);
  for (double& x : p.values()) x = 3.0;
  RampOptions sampled;
  sampled.kernel = RampKernel::frequency_sampled;
  const auto padded = ramp_filter_padded(p.row(0), p.t_step(), sampled);
  double sum = 0.0;
  for (double x : padded) sum += x;
  CHECK(std::abs(sum / padded.size()) < 1e-10);
  // away from the truncation edges the filtered constant vanishes
  const ParallelSinogram q = ramp_filter(p, sampled);
  CHECK(std::abs(q(0, 32)) < 0.1 * std::abs(q(0, 0)));
}

TEST_CASE("padded columns have zero mean with the sampled kernel") {
  const EvenField v(6);
  const ParallelSinogram p = sample_parallel(v, 101, 12, AngularSpan::half);
  RampOptions o;
  o.kernel = RampKernel::frequency_sampled;
  for (int j = 0; j < 12; ++j) {
    const auto col = ramp_filter_padded(p.row(j), p.t_step(), o);
    double sum = 0.0, scale = 0.0;
    for (double x : col) {
      sum += x;
      scale = std::max(scale, std::abs(x));
    }
    CHECK(std::abs(sum) / col.size() < 1e-10 * std::max(1.0, scale));
  }
}

TEST_CASE("sinusoid is scaled by its frequency") {
  // sampled kernel: compare with |sigma| applied to a hand-rolled DFT of the
  // zero-padded column
  const int n = 64;
  const double step = 2.0 / (n - 1);
  const double sigma0 = kTwoPi * 5 / (2 * n * step);
  RampOptions o;
  o.kernel = RampKernel::frequency_sampled;
  std::vector<double> col(n);
  for (int k = 0; k < n; ++k) col[k] = std::cos(sigma0 * k * step);
  const auto out = ramp_filter_padded(col, step, o);
  std::vector<std::complex<double>> spec(2 * n);
  for (int m = 0; m < 2 * n; ++m) {
    for (int k = 0; k < n; ++k) spec[m] += col[k] * std::polar(1.0, -kTwoPi * m * k / (2 * n));
    const int f = m <= n ? m : m - 2 * n;
    spec[m] *= std::abs(kTwoPi * f / (2 * n * step));
  }
  for (int k = 0; k < 2 * n; k += 7) {
    std::complex<double> acc{};
    for (int m = 0; m < 2 * n; ++m) acc += spec[m] * std::polar(1.0, kTwoPi * m * k / (2 * n));
    CHECK(out[k] == doctest::Approx(acc.real() / (2 * n)).scale(1.0).epsilon(1e-10));
  }

  // band-limited kernel: a pure in-band cosine on a long support comes out
  // scaled by sigma0 in the middle of the detector
  const int big = 4001;
  const double dt = 2.0 / (big - 1);
  std::vector<double> cosine(big);
  const double s0 = 40.0;
  for (int k = 0; k < big; ++k) cosine[k] = std::cos(s0 * (-1.0 + k * dt));
  const auto filtered = ramp_filter_padded(cosine, dt);
  CHECK(filtered[big / 2] == doctest::Approx(s0 * cosine[big / 2]).epsilon(2e-2));
}

TEST_CASE("ramp kernel closed form") {
  const double step = 0.01;
  const auto h = ramp_kernel(4, step);
  // Ram-Lak in angular units: 2 pi / (4 step^2) at 0, -2 / (pi step^2 k^2) at odd k, 0 at even k
  CHECK(h[0] == doctest::Approx(kTwoPi / (4 * step * step)));
  CHECK(h[1] == doctest::Approx(-2.0 / (kPi * step * step)));
  CHECK(std::abs(h[2]) < 1e-6 * h[0]);
  CHECK(h[3] == doctest::Approx(-2.0 / (kPi * step * step * 9)));
  RampOptions w;
  w.cosine_window = true;
  const auto hw = ramp_kernel(3, step, w);
  CHECK(hw[0] < h[0]);
  // (1/pi) int_0^c s cos(pi s / 2c) ds = (c^2 / pi) (2 / pi) (1 - 2 / pi)
  const double c = kPi / step;
  CHECK(hw[0] == doctest::Approx(c * c * (2.0 / kPi) * (1.0 - 2.0 / kPi) / kPi).epsilon(1e-6));
  RampOptions bad;
  bad.cutoff_fraction = 1.5;
  CHECK_THROWS(ramp_kernel(3, step, bad));
}

TEST_CASE("ramp filter is linear") {
  const ParallelSinogram a = analytic_radon(random_phantom(1), 65, 8);
  const ParallelSinogram b = analytic_radon(random_phantom(2), 65, 8);
  ParallelSinogram c = a;
  for (std::size_t k = 0; k < c.values().size(); ++k) c.values()[k] = a.values()[k] - 4.0 * b.values()[k];
  const auto fa = ramp_filter(a), fb = ramp_filter(b), fc = ramp_filter(c);
  for (std::size_t k = 0; k < fc.values().size(); ++k) {
    CHECK(fc.values()[k] == doctest::Approx(fa.values()[k] - 4.0 * fb.values()[k]).scale(1.0).epsilon(1e-12));
  }
}

TEST_CASE("FBP normalisation and small reconstructions") {
  const FanGeometry g = make_fan_geometry(10.0);
  CHECK(fbp_normalization() == doctest::Approx(1.0 / (4.0 * kPi)));
  CHECK(calibrate_fbp_normalization(g, 128) == doctest::Approx(fbp_normalization()).epsilon(0.02));
  const ImageGrid zero = fbp_linear_pipeline(ParallelSinogram(64, 64), g, 32);
  for (double x : zero.values()) CHECK(x == 0.0);

  const ParallelSinogram p = analytic_radon(default_phantom(), 128, 128);
  const ImageGrid series = fbp_linear_pipeline(p, g, 128);
  FbpOptions rebin;
  rebin.route = FbpRoute::rebin_bst;
  // the two routes interpolate the sharp filtered data differently; at n = 128
  // the gap is a few percent of the image norm
  CHECK(rel_l2_disk(series, fbp_linear_pipeline(p, g, 128, rebin)) < 0.1);
  CHECK(rel_l2_disk(series, rasterize(default_phantom(), 128)) < 0.15);
}
