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

#include <ostream>
#include <string>
#include <vector>

namespace fanbp {

struct BenchRow {
  std::string method;
  int n = 0;
  int n_theta = 0;
  double seconds = 0.0;  // median over repetitions
};

/// Methods: "direct" (pixel-driven linear fan backprojection), "bst"
/// (parallel BST backprojection), "rebin-bst" and "bessel" (linear fan
/// routes). Inputs are the default phantom at n detector samples and n angles.
std::vector<std::string> bench_methods();

std::vector<BenchRow> run_bench(const std::vector<int>& sizes, const std::vector<std::string>& methods,
                                int repetitions, double d = 10.0);

/// Header "method,n,n_theta,seconds" and one line per row.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace fanbp
