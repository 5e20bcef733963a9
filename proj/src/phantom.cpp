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

#include "fanbp/phantom.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fanbp {

Phantom default_phantom() {
  // cx, cy, a, b, rotation (deg), amplitude
  struct Row { double cx, cy, a, b, deg, amp; };
  constexpr Row rows[] = {
      {0.0, 0.0, 0.69, 0.92, 0.0, 1.0},
      {0.0, -0.0184, 0.6624, 0.874, 0.0, -0.8},
      {0.22, 0.0, 0.11, 0.31, -18.0, -0.2},
      {-0.22, 0.0, 0.16, 0.41, 18.0, -0.2},
      {0.0, 0.35, 0.21, 0.25, 0.0, 0.1},
      {0.0, 0.1, 0.046, 0.046, 0.0, 0.1},
      {0.0, -0.1, 0.046, 0.046, 0.0, 0.1},
      {-0.08, -0.605, 0.046, 0.023, 0.0, 0.1},
      {0.0, -0.606, 0.023, 0.023, 0.0, 0.1},
      {0.06, -0.605, 0.023, 0.046, 0.0, 0.1},
  };
  Phantom p;
  for (const auto& r : rows) {
    p.push_back({{r.cx, r.cy}, {r.a, r.b}, r.deg * kPi / 180.0, r.amp});
  }
  return p;
}

Phantom disk_phantom(double radius) { return {Ellipse{{0.0, 0.0}, {radius, radius}, 0.0, 1.0}}; }

bool inside_unit_disk(const Ellipse& e) {
  const double c = std::hypot(e.center.first, e.center.second);
  return c + std::max(e.semi_axes.first, e.semi_axes.second) <= 1.0 + 1e-12;
}

Phantom parse_phantom(std::istream& in) {
  Phantom out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    Ellipse e;
    if (!(fields >> e.center.first)) continue;  // blank
    if (!(fields >> e.center.second >> e.semi_axes.first >> e.semi_axes.second >> e.rotation >> e.amplitude)) {
      throw std::runtime_error("phantom line " + std::to_string(line_no) + ": expected 'cx cy a b rot amp'");
    }
    std::string extra;
    if (fields >> extra) throw std::runtime_error("phantom line " + std::to_string(line_no) + ": trailing fields");
    if (!(e.semi_axes.first > 0.0) || !(e.semi_axes.second > 0.0)) {
      throw std::runtime_error("phantom line " + std::to_string(line_no) + ": semi-axes must be positive");
    }
    if (!inside_unit_disk(e)) {
      throw std::runtime_error("phantom line " + std::to_string(line_no) + ": ellipse leaves the unit disk");
    }
    out.push_back(e);
  }
  return out;
}

Phantom load_phantom(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open phantom file " + path.string());
  return parse_phantom(in);
}

namespace {

bool contains(const Ellipse& e, double x1, double x2) {
  const double dx = x1 - e.center.first;
  const double dy = x2 - e.center.second;
  const double c = std::cos(e.rotation);
  const double s = std::sin(e.rotation);
  const double u = (c * dx + s * dy) / e.semi_axes.first;
  const double v = (-s * dx + c * dy) / e.semi_axes.second;
  return u * u + v * v <= 1.0;
}

double chord(const Ellipse& e, double t, double theta) {
  const double phi = theta - e.rotation;
  const double a = e.semi_axes.first;
  const double b = e.semi_axes.second;
  const double r2 = a * a * std::cos(phi) * std::cos(phi) + b * b * std::sin(phi) * std::sin(phi);
  const double tc = t - (e.center.first * std::cos(theta) + e.center.second * std::sin(theta));
  const double gap = r2 - tc * tc;
  if (gap <= 0.0) return 0.0;
  return 2.0 * a * b * std::sqrt(gap) / r2;
}

}  // namespace

double evaluate(const Phantom& phantom, double x1, double x2) {
  double v = 0.0;
  for (const auto& e : phantom) {
    if (contains(e, x1, x2)) v += e.amplitude;
  }
  return v;
}

ImageGrid rasterize(const Phantom& phantom, int n, int supersample) {
  if (n < 2) throw std::invalid_argument("rasterize needs n >= 2");
  if (supersample < 1) throw std::invalid_argument("supersample must be >= 1");
  ImageGrid img(n);
  const double sub = img.pixel_size() / supersample;
  const double first = -0.5 * img.pixel_size() + 0.5 * sub;
  const double weight = 1.0 / (supersample * supersample);
#pragma omp parallel for
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int a = 0; a < supersample; ++a) {
        for (int b = 0; b < supersample; ++b) {
          acc += evaluate(phantom, img.coord(j) + first + b * sub, img.coord(i) + first + a * sub);
        }
      }
      img(i, j) = acc * weight;
    }
  }
  return img;
}

double line_integral(const Phantom& phantom, double t, double theta) {
  // Fold onto theta in [0, pi) so p(t, theta) and p(-t, theta + pi) run the
  // same arithmetic; tangent rays otherwise amplify rounding in theta.
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  if (theta >= kPi) {
    theta -= kPi;
    t = -t;
  }
  double v = 0.0;
  for (const auto& e : phantom) v += e.amplitude * chord(e, t, theta);
  return v;
}

ParallelSinogram analytic_radon(const Phantom& phantom, int n_t, int n_theta) {
  ParallelSinogram p(n_t, n_theta);
#pragma omp parallel for
  for (int j = 0; j < n_theta; ++j) {
    for (int k = 0; k < n_t; ++k) p(j, k) = line_integral(phantom, p.t(k), p.theta(j));
  }
  return p;
}

double total_mass(const Phantom& phantom) {
  double m = 0.0;
  for (const auto& e : phantom) m += e.amplitude * kPi * e.semi_axes.first * e.semi_axes.second;
  return m;
}

}  // namespace fanbp
