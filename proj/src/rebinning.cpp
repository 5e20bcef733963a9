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

#include "fanbp/rebinning.hpp"

#include <stdexcept>

#include "fanbp/sampling.hpp"

namespace fanbp {

ParallelSinogram adjoint_rebin_standard(const StandardFanSinogram& w, int n_t, int n_theta2pi) {
  ParallelSinogram out(n_t, n_theta2pi, AngularSpan::full);
  const ChangeOfVariables cv{w.geometry().d};
#pragma omp parallel for
  for (int j = 0; j < n_theta2pi; ++j) {
    const double theta = out.theta(j);
    for (int k = 0; k < n_t; ++k) {
      const double t = out.t(k);
      const double gamma = cv.gamma_of_t(t);
      out(j, k) = sample(w, gamma, theta - gamma) * cv.jac_s(t);
    }
  }
  return out;
}

ParallelSinogram adjoint_rebin_linear(const LinearFanSinogram& g, int n_t, int n_theta2pi) {
  ParallelSinogram out(n_t, n_theta2pi, AngularSpan::full);
  const ChangeOfVariables cv{g.geometry().d};
#pragma omp parallel for
  for (int j = 0; j < n_theta2pi; ++j) {
    const double theta = out.theta(j);
    for (int k = 0; k < n_t; ++k) {
      const double t = out.t(k);
      out(j, k) = sample(g, cv.s_of_t(t), theta - cv.gamma_of_t(t)) * cv.jac_l(t);
    }
  }
  return out;
}

StandardFanSinogram linear_to_standard(const LinearFanSinogram& g, int n_gamma) {
  StandardFanSinogram w(g.geometry(), n_gamma, g.n_beta(), g.beta_extent());
  const double d = g.geometry().d;
  std::vector<double> s(static_cast<std::size_t>(n_gamma));
  for (int i = 0; i < n_gamma; ++i) s[i] = d * std::tan(w.det(i));
#pragma omp parallel for
  for (int j = 0; j < g.n_beta(); ++j) {
    const auto row = g.row(j);
    for (int i = 0; i < n_gamma; ++i) w(j, i) = interpolate_uniform(row, -g.det_max(), g.det_step(), s[i]);
  }
  return w;
}

LinearFanSinogram standard_to_linear(const StandardFanSinogram& w, int n_s) {
  LinearFanSinogram g(w.geometry(), n_s, w.n_beta(), w.beta_extent());
  const double d = w.geometry().d;
#pragma omp parallel for
  for (int j = 0; j < w.n_beta(); ++j) {
    const auto row = w.row(j);
    for (int i = 0; i < n_s; ++i) {
      g(j, i) = interpolate_uniform(row, -w.det_max(), w.det_step(), std::atan(g.det(i) / d));
    }
  }
  return g;
}

LinearFanSinogram adjoint_linear_to_standard(const StandardFanSinogram& w, int n_s) {
  LinearFanSinogram g = standard_to_linear(w, n_s);
  const double d = w.geometry().d;
  for (int j = 0; j < g.n_beta(); ++j) {
    for (int i = 0; i < n_s; ++i) {
      const double s = g.det(i);
      g(j, i) *= d / (d * d + s * s);
    }
  }
  return g;
}

double tau_weight(const FanGeometry& geom, double gamma) {
  const double c = std::cos(gamma);
  return geom.d / (c * c);
}

StandardFanSinogram apply_tau(const StandardFanSinogram& w) {
  StandardFanSinogram z = w;
  for (int i = 0; i < w.n_det(); ++i) {
    const double weight = tau_weight(w.geometry(), w.det(i));
    for (int j = 0; j < w.n_beta(); ++j) z(j, i) *= weight;
  }
  return z;
}

ShearedSinogram::ShearedSinogram(int n_gamma, int n_theta, double gamma_max)
    : n_gamma_(n_gamma), n_theta_(n_theta), gamma_max_(gamma_max) {
  if (n_gamma < 2 || n_theta < 1) throw std::invalid_argument("sheared sinogram needs n_gamma >= 2, n_theta >= 1");
  data_.assign(static_cast<std::size_t>(n_gamma) * n_theta, 0.0);
}

ShearedSinogram shear_to_theta(const StandardFanSinogram& z, int n_theta2pi) {
  ShearedSinogram out(z.n_det(), n_theta2pi, z.det_max());
#pragma omp parallel for
  for (int j = 0; j < n_theta2pi; ++j) {
    const double theta = out.theta(j);
    for (int i = 0; i < z.n_det(); ++i) {
      const double gamma = z.det(i);
      out(j, i) = sample(z, gamma, theta - gamma);
    }
  }
  return out;
}

}  // namespace fanbp
