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

#include "fanbp/bessel.hpp"

using namespace fanbp;

TEST_CASE("reference values") {
  const auto j = bessel_j_sequence(3, 2.0);
  CHECK(j[1] == doctest::Approx(0.5767248077568734).epsilon(1e-14));  // mpmath besselj(1, 2)
  CHECK(bessel_j_sequence(1, 0.0)[0] == 1.0);
  const auto zero = bessel_j_sequence(4, 0.0);
  CHECK(zero[1] == 0.0);
  CHECK(zero[3] == 0.0);
}

TEST_CASE("Miller recurrence against the standard library") {
  for (double x : {1e-6, 0.3, 1.0, 7.5, 42.0, 250.0}) {
    const int count = static_cast<int>(x) + 60;
    const auto seq = bessel_j_sequence(count, x);
    for (int n = 0; n < count; n += std::max(1, count / 40)) {
      CHECK(std::abs(seq[n] - std::cyl_bessel_j(static_cast<double>(n), x)) < 1e-12);
    }
  }
}

// libstdc++ loses accuracy for large arguments; use the periodic integral
// J_n(x) = (1/2pi) int_0^2pi cos(n t - x sin t) dt, where the trapezoid rule
// converges geometrically once the node count exceeds n + x.
TEST_CASE("Miller recurrence against the integral representation at large x") {
  const double x = 1800.0;
  const int count = 1900;
  const auto seq = bessel_j_sequence(count, x);
  const int nodes = 8192;
  for (int n = 0; n < count; n += 97) {
    long double acc = 0.0L;
    for (int k = 0; k < nodes; ++k) {
      const long double t = 2.0L * 3.14159265358979323846L * k / nodes;
      acc += std::cos(n * t - x * std::sin(t));
    }
    CHECK(std::abs(seq[n] - static_cast<double>(acc / nodes)) < 1e-12);
  }
}

TEST_CASE("Bessel table layout and bounds") {
  const FanGeometry g = make_fan_geometry(10.0);
  const std::vector<double> sigmas{0.0, 0.5, 2.0, 9.0};
  const BesselTable t = bessel_table(g, 120, sigmas);
  CHECK(t.n_sigma() == 4);
  CHECK(t(0, 0) == 1.0);
  for (int n = 1; n < 120; ++n) CHECK(t(n, 0) == 0.0);
  for (double v : t.values) CHECK(std::abs(v) <= 1.0);
  CHECK(t(3, 2) == doctest::Approx(std::cyl_bessel_j(3.0, 20.0)).epsilon(1e-10));
  CHECK_THROWS(bessel_table(g, 0, sigmas));
}

TEST_CASE("truncation rule") {
  const FanGeometry g = make_fan_geometry(10.0);
  // (x/2)^n/n! first stays below the tolerance at these orders (long double check below)
  CHECK(choose_truncation(g, 2.0, 1e-12) == 47);
  CHECK(choose_truncation(g, 8.0, 1e-9) == 125);
  CHECK(choose_truncation(g, 0.0, 1e-12) == 1);
  CHECK(choose_truncation(g, 0.0, 1e-12, 33) == 33);
  for (double x : {0.5, 20.0, 80.0, 640.0}) {
    for (double eps : {1e-6, 1e-9, 1e-12}) {
      const int n = choose_truncation(g, x / g.d, eps);
      for (int m = n; m < n + 300; ++m) CHECK(truncation_bound(x, m) < eps);
      if (n > 1) CHECK(truncation_bound(x, n - 1) >= eps);
    }
    CHECK(choose_truncation(g, x / g.d, 1e-6) <= choose_truncation(g, x / g.d, 1e-9));
  }
  // independent evaluation of the bound in long double
  long double b = 1.0L;
  for (int n = 1; n <= 47; ++n) b *= 10.0L / n;
  CHECK(static_cast<double>(b) < 1e-12);
  CHECK(static_cast<double>(b * 47.0L / 10.0L) >= 1e-12);
  CHECK(truncation_bound(20.0, 47) == doctest::Approx(static_cast<double>(b)).epsilon(1e-10));
  CHECK_THROWS(choose_truncation(g, 1.0, 0.0));
}
