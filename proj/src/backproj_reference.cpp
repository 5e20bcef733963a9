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

#include "fanbp/backproj_reference.hpp"

#include <cmath>
#include <vector>

#include "fanbp/sampling.hpp"

namespace fanbp {

SourceFrame source_frame(double d, double beta, double x1, double x2) {
  SourceFrame f;
  f.beta = beta;
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  f.r_beta[0] = -d * s;
  f.r_beta[1] = d * c;
  const double along = x1 * c + x2 * s;    // x . xi_beta
  const double depth = d - (-x1 * s + x2 * c);  // d - x . xi_beta_perp
  f.l_beta = std::hypot(along, depth);
  f.gamma_beta = std::atan2(along, depth);
  f.u_beta = depth / d;
  f.s_beta = along / f.u_beta;
  return f;
}

namespace {

struct AngleNode {
  double cos_b;
  double sin_b;
  double beta;
  double weight;
  int row;  // measured row, or -1 when the value comes from the symmetry
};

template <FanKind Kind>
std::vector<AngleNode> full_circle_nodes(const FanSinogram<Kind>& w) {
  std::vector<AngleNode> nodes;
  const double db = w.beta_step();
  for (int j = 0; j < w.n_beta(); ++j) {
    const double b = w.beta(j);
    nodes.push_back({std::cos(b), std::sin(b), b, db, j});
  }
  if (!w.full_circle()) {
    for (int j = w.n_beta();; ++j) {
      const double b = j * db;
      if (b >= kTwoPi - 1e-12) break;
      nodes.push_back({std::cos(b), std::sin(b), b, std::min(db, kTwoPi - b), -1});
    }
  }
  return nodes;
}

template <FanKind Kind>
double fan_value(const FanSinogram<Kind>& w, const AngleNode& node, double u) {
  if (node.row >= 0) return interpolate_uniform(w.row(node.row), -w.det_max(), w.det_step(), u);
  return sample(w, u, node.beta);
}

double standard_point(const StandardFanSinogram& w, const std::vector<AngleNode>& nodes, double x1, double x2) {
  const double d = w.geometry().d;
  double acc = 0.0;
  for (const auto& node : nodes) {
    const double along = x1 * node.cos_b + x2 * node.sin_b;
    const double depth = d + x1 * node.sin_b - x2 * node.cos_b;
    const double l = std::hypot(along, depth);
    acc += node.weight * fan_value(w, node, std::atan2(along, depth)) / l;
  }
  return acc;
}

double linear_point(const LinearFanSinogram& g, const std::vector<AngleNode>& nodes, double x1, double x2) {
  const double d = g.geometry().d;
  double acc = 0.0;
  for (const auto& node : nodes) {
    const double along = x1 * node.cos_b + x2 * node.sin_b;
    const double u = (d + x1 * node.sin_b - x2 * node.cos_b) / d;
    const double s = along / u;
    acc += node.weight * std::sqrt(s * s + d * d) / (d * u) * fan_value(g, node, s);
  }
  return acc;
}

}  // namespace

double backproject_parallel_at(const ParallelSinogram& p, double x1, double x2) {
  const double dtheta = p.theta_step();
  const double weight = kTwoPi / p.n_theta();
  double acc = 0.0;
  for (int j = 0; j < p.n_theta(); ++j) {
    const double theta = j * dtheta;
    acc += interpolate_uniform(p.row(j), -1.0, p.t_step(), x1 * std::cos(theta) + x2 * std::sin(theta));
  }
  return weight * acc;
}

ImageGrid backproject_parallel(const ParallelSinogram& p, int n) {
  ImageGrid img(n);
  std::vector<double> cs(p.n_theta()), sn(p.n_theta());
  for (int j = 0; j < p.n_theta(); ++j) {
    cs[j] = std::cos(p.theta(j));
    sn[j] = std::sin(p.theta(j));
  }
  // Half span carries the factor 2 of the evenness fold, full span does not;
  // both reduce to 2 pi / n_theta per angle.
  const double weight = kTwoPi / p.n_theta();
  const double dt = p.t_step();
#pragma omp parallel for
  for (int i = 0; i < n; ++i) {
    const double x2 = img.coord(i);
    for (int jx = 0; jx < n; ++jx) {
      const double x1 = img.coord(jx);
      double acc = 0.0;
      for (int j = 0; j < p.n_theta(); ++j) {
        acc += interpolate_uniform(p.row(j), -1.0, dt, x1 * cs[j] + x2 * sn[j]);
      }
      img(i, jx) = weight * acc;
    }
  }
  return img;
}

ImageGrid backproject_standard_fan(const StandardFanSinogram& w, int n) {
  ImageGrid img(n);
  const auto nodes = full_circle_nodes(w);
#pragma omp parallel for
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) img(i, j) = standard_point(w, nodes, img.coord(j), img.coord(i));
  }
  return img;
}

double backproject_standard_fan_at(const StandardFanSinogram& w, double x1, double x2) {
  return standard_point(w, full_circle_nodes(w), x1, x2);
}

ImageGrid backproject_linear_fan(const LinearFanSinogram& g, int n) {
  ImageGrid img(n);
  const auto nodes = full_circle_nodes(g);
#pragma omp parallel for
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) img(i, j) = linear_point(g, nodes, img.coord(j), img.coord(i));
  }
  return img;
}

double backproject_linear_fan_at(const LinearFanSinogram& g, double x1, double x2) {
  return linear_point(g, full_circle_nodes(g), x1, x2);
}

}  // namespace fanbp
