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

#include "fanbp/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fanbp {

std::vector<double> bessel_j_sequence(int count, double x) {
  if (count < 1) return {};
  if (x < 0.0) throw std::invalid_argument("bessel_j_sequence expects x >= 0");
  std::vector<double> out(count, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const double top = std::max<double>(count, std::ceil(x));
  int start = static_cast<int>(top + 50.0 + 10.0 * std::cbrt(top));
  if (start % 2) ++start;

  double next = 0.0;  // J_{k+1}
  double cur = 1e-300;  // J_k
  double norm = 0.0;
  for (int k = start; k > 0; --k) {
    const double prev = 2.0 * k / x * cur - next;  // J_{k-1}
    next = cur;
    cur = prev;
    if (k - 1 < count) out[k - 1] = cur;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * cur;
    if (std::abs(cur) > 1e250) {
      next *= 1e-250;
      cur *= 1e-250;
      norm *= 1e-250;
      for (int i = k - 1; i < count; ++i) out[i] *= 1e-250;
    }
  }
  norm += cur;
  for (double& v : out) v /= norm;
  return out;
}

BesselTable bessel_table(const FanGeometry& geom, int n_terms, std::span<const double> sigmas) {
  if (n_terms < 1) throw std::invalid_argument("bessel table needs at least one term");
  BesselTable t;
  t.n_terms = n_terms;
  t.sigmas.assign(sigmas.begin(), sigmas.end());
  const std::size_t ns = sigmas.size();
  t.values.assign(static_cast<std::size_t>(n_terms) * ns, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < ns; ++k) {
    const auto seq = bessel_j_sequence(n_terms, geom.d * std::abs(sigmas[k]));
    for (int n = 0; n < n_terms; ++n) t.values[n * ns + k] = seq[n];
  }
  return t;
}

double truncation_bound(double x, int n) {
  if (n == 0) return 1.0;
  if (x == 0.0) return 0.0;
  return std::exp(n * std::log(0.5 * std::abs(x)) - std::lgamma(n + 1.0));
}

int choose_truncation(const FanGeometry& geom, double sigma_max, double eps, int min_terms) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const double x = geom.d * std::abs(sigma_max);
  // The bound grows while n < x/2 and decays afterwards.
  int last_above = -1;
  for (int n = 0;; ++n) {
    const bool above = truncation_bound(x, n) >= eps;
    if (above) last_above = n;
    if (!above && n > 0.5 * x) break;
  }
  return std::max({last_above + 1, min_terms, 1});
}

}  // namespace fanbp
