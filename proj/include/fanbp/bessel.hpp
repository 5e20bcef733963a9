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

#include <span>
#include <vector>

#include "fanbp/core.hpp"

namespace fanbp {

/// J_0(x), ..., J_{count-1}(x) by Miller's backward recurrence, normalised
/// with J_0 + 2 sum_k J_2k = 1. x >= 0.
std::vector<double> bessel_j_sequence(int count, double x);

/// J_n(d sigma_k) for n = 0..n_terms-1 over a grid of sigma values.
struct BesselTable {
  int n_terms = 0;
  std::vector<double> sigmas;
  std::vector<double> values;  // n_terms x sigmas.size(), row-major

  int n_sigma() const { return static_cast<int>(sigmas.size()); }
  double operator()(int n, int k) const { return values[static_cast<std::size_t>(n) * sigmas.size() + k]; }
};

BesselTable bessel_table(const FanGeometry& geom, int n_terms, std::span<const double> sigmas);

/// (x/2)^n / n!, the bound on |J_n(x)|.
double truncation_bound(double x, int n);

/// Smallest n_terms with truncation_bound(d sigma_max, n) < eps for every
/// n >= n_terms, raised to at least `min_terms`.
int choose_truncation(const FanGeometry& geom, double sigma_max, double eps, int min_terms = 1);

}  // namespace fanbp
