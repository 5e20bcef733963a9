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

#include <cmath>
#include <vector>

#include "fanbp/core.hpp"

namespace fanbp {

/// Maps a parallel coordinate t (|t| < d) onto both fan parametrisations,
/// together with the Jacobians that turn the inverse rebinnings into adjoints.
struct ChangeOfVariables {
  double d;

  double gamma_of_t(double t) const { return std::asin(t / d); }
  double s_of_t(double t) const { return t * d / std::sqrt(d * d - t * t); }
  double jac_s(double t) const { return 1.0 / std::sqrt(d * d - t * t); }
  double jac_l(double t) const {
    const double q = d * d - t * t;
    return d * d * d / (q * std::sqrt(q));
  }
};

/// Adjoint of the standard rebinning,
///   (M_s^* w)(t, theta) = w(gamma(t), theta - gamma(t)) J_s(t),
/// sampled on [-1,1] x [0,2pi). The backprojection of the result integrates
/// over the full circle without the evenness factor 2.
ParallelSinogram adjoint_rebin_standard(const StandardFanSinogram& w, int n_t, int n_theta2pi);

/// Adjoint of the linear rebinning,
///   (M_l^* g)(t, theta) = g(s(t), theta - gamma(t)) J_l(t).
ParallelSinogram adjoint_rebin_linear(const LinearFanSinogram& g, int n_t, int n_theta2pi);

/// Geometry switch L: (L g)(gamma, beta) = g(d tan gamma, beta), by 1D linear
/// interpolation along the detector. Zero where |d tan gamma| > s_max.
StandardFanSinogram linear_to_standard(const LinearFanSinogram& g, int n_gamma);

/// Inverse switch: (L^-1 w)(s, beta) = w(atan(s/d), beta).
LinearFanSinogram standard_to_linear(const StandardFanSinogram& w, int n_s);

/// Adjoint of L: (L^* w)(s, beta) = d/(d^2+s^2) * w(atan(s/d), beta).
LinearFanSinogram adjoint_linear_to_standard(const StandardFanSinogram& w, int n_s);

/// Weight tau(gamma) = d sec^2(gamma), so that B_l g = B_s tau L g.
double tau_weight(const FanGeometry& geom, double gamma);

/// z(gamma, beta) = tau(gamma) w(gamma, beta).
StandardFanSinogram apply_tau(const StandardFanSinogram& w);

/// Z(gamma, theta) = z(gamma, theta - gamma) on [-gamma_max, gamma_max] x [0,2pi).
/// Rows are angles, the fan angle is the fast axis.
class ShearedSinogram {
 public:
  ShearedSinogram() = default;
  ShearedSinogram(int n_gamma, int n_theta, double gamma_max);

  int n_gamma() const { return n_gamma_; }
  int n_theta() const { return n_theta_; }
  double gamma_max() const { return gamma_max_; }
  double gamma_step() const { return 2.0 * gamma_max_ / (n_gamma_ - 1); }
  double gamma(int i) const { return -gamma_max_ + i * gamma_step(); }
  double theta_step() const { return kTwoPi / n_theta_; }
  double theta(int j) const { return j * theta_step(); }

  double operator()(int j, int i) const { return data_[static_cast<std::size_t>(j) * n_gamma_ + i]; }
  double& operator()(int j, int i) { return data_[static_cast<std::size_t>(j) * n_gamma_ + i]; }

 private:
  int n_gamma_ = 0;
  int n_theta_ = 0;
  double gamma_max_ = 0.0;
  std::vector<double> data_;
};

/// Shifts every fan-angle row along the source angle by +gamma (1D linear
/// interpolation in beta, fan symmetry for angles outside the measured range).
ShearedSinogram shear_to_theta(const StandardFanSinogram& z, int n_theta2pi);

}  // namespace fanbp
