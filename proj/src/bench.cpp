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

#include "fanbp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "fanbp/backproj_reference.hpp"
#include "fanbp/bessel_backproj.hpp"
#include "fanbp/bst.hpp"
#include "fanbp/phantom.hpp"
#include "fanbp/radon_forward.hpp"

namespace fanbp {

std::vector<std::string> bench_methods() { return {"direct", "bst", "rebin-bst", "bessel"}; }

namespace {

template <typename F>
double median_seconds(int repetitions, F&& f) {
  std::vector<double> times;
  for (int r = 0; r < repetitions; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(times.begin(), times.end());
  const std::size_t m = times.size() / 2;
  return times.size() % 2 ? times[m] : 0.5 * (times[m - 1] + times[m]);
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<int>& sizes, const std::vector<std::string>& methods, int repetitions,
                                double d) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  const auto known = bench_methods();
  for (const auto& m : methods) {
    if (std::find(known.begin(), known.end(), m) == known.end()) throw std::invalid_argument("unknown bench method: " + m);
  }
  const FanGeometry geom = make_fan_geometry(d);
  const Phantom phantom = default_phantom();
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    if (n < 2) throw std::invalid_argument("bench sizes must be >= 2");
    const ParallelSinogram p = analytic_radon(phantom, n, n);
    const LinearFanSinogram g = rebin_to_linear(p, geom, n, n);
    for (const auto& m : methods) {
      double seconds = 0.0;
      if (m == "direct") {
        seconds = median_seconds(repetitions, [&] { (void)backproject_linear_fan(g, n); });
      } else if (m == "bst") {
        seconds = median_seconds(repetitions, [&] { (void)bst_backproject(p, n); });
      } else if (m == "rebin-bst") {
        seconds = median_seconds(repetitions, [&] { (void)bst_backproject_linear_fan(g, n); });
      } else {
        seconds = median_seconds(repetitions, [&] { (void)linear_fan_backproject(g, n); });
      }
      rows.push_back({m, n, n, seconds});
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "method,n,n_theta,seconds\n";
  for (const auto& r : rows) out << r.method << ',' << r.n << ',' << r.n_theta << ',' << r.seconds << '\n';
}

}  // namespace fanbp
