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

#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanbp {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Source inside (or on) the object support, or another impossible setup.
class InvalidGeometry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fan-beam acquisition geometry around the unit disk.
///
/// `d` is the source-origin distance. The remaining fields are derived:
/// `s_max` is the outermost linear-detector position that still sees the
/// disk, `gamma_max` the half opening angle of the fan and `beta_span` the
/// source-angle range that covers every line through the disk at least once.
struct FanGeometry {
  double d = 0.0;
  double s_max = 0.0;
  double gamma_max = 0.0;
  double beta_span = 0.0;
};

FanGeometry make_fan_geometry(double d);

/// Square image on [-1,1]^2. Row i holds x2, column j holds x1; the pixel
/// centre of (i,j) is (-1 + (2j+1)/n, -1 + (2i+1)/n).
class ImageGrid {
 public:
  ImageGrid() = default;
  explicit ImageGrid(int n);
  ImageGrid(int n, std::vector<double> data);

  int size() const { return n_; }
  double pixel_size() const { return 2.0 / n_; }
  double coord(int index) const { return -1.0 + (2.0 * index + 1.0) / n_; }

  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  std::span<const double> values() const { return data_; }
  std::span<double> values() { return data_; }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

/// Angular coverage of a parallel sinogram. `half` is [0,pi) with the
/// evenness p(t,theta) = p(-t,theta+pi) implied; `full` is [0,2pi).
enum class AngularSpan { half, full };

/// Parallel sinogram p(t,theta). Rows are angles, the detector is the fast
/// axis. t_k = -1 + 2k/(n_t-1) includes both ends; theta excludes its upper end.
class ParallelSinogram {
 public:
  ParallelSinogram() = default;
  ParallelSinogram(int n_t, int n_theta, AngularSpan span = AngularSpan::half);

  int n_t() const { return n_t_; }
  int n_theta() const { return n_theta_; }
  AngularSpan span() const { return span_; }
  double theta_extent() const { return span_ == AngularSpan::half ? kPi : kTwoPi; }
  double t_step() const { return 2.0 / (n_t_ - 1); }
  double theta_step() const { return theta_extent() / n_theta_; }
  double t(int k) const { return -1.0 + k * t_step(); }
  double theta(int j) const { return j * theta_step(); }

  double operator()(int j, int k) const { return data_[static_cast<std::size_t>(j) * n_t_ + k]; }
  double& operator()(int j, int k) { return data_[static_cast<std::size_t>(j) * n_t_ + k]; }

  std::span<const double> row(int j) const { return {data_.data() + static_cast<std::size_t>(j) * n_t_, static_cast<std::size_t>(n_t_)}; }
  std::span<double> row(int j) { return {data_.data() + static_cast<std::size_t>(j) * n_t_, static_cast<std::size_t>(n_t_)}; }
  std::span<const double> values() const { return data_; }
  std::span<double> values() { return data_; }

 private:
  int n_t_ = 0;
  int n_theta_ = 0;
  AngularSpan span_ = AngularSpan::half;
  std::vector<double> data_;
};

enum class FanKind { standard, linear };

/// Fan-beam sinogram. For the standard geometry the detector coordinate is
/// the fan angle gamma in [-gamma_max, gamma_max]; for the linear geometry it
/// is the height s in [-s_max, s_max] on a virtual detector through the
/// origin. Source angles are beta_j = j * beta_extent / n_beta; by default
/// beta_extent is the short-scan span pi + 2 gamma_max and the rest of the
/// circle is recovered through the fan symmetry.
template <FanKind Kind>
class FanSinogram {
 public:
  static constexpr FanKind kind = Kind;

  FanSinogram() = default;
  FanSinogram(const FanGeometry& geometry, int n_det, int n_beta);
  FanSinogram(const FanGeometry& geometry, int n_det, int n_beta, double beta_extent);

  const FanGeometry& geometry() const { return geometry_; }
  int n_det() const { return n_det_; }
  int n_beta() const { return n_beta_; }
  double beta_extent() const { return beta_extent_; }
  bool full_circle() const { return beta_extent_ >= kTwoPi - 1e-12; }

  double det_max() const { return Kind == FanKind::standard ? geometry_.gamma_max : geometry_.s_max; }
  double det_step() const { return 2.0 * det_max() / (n_det_ - 1); }
  double det(int i) const { return -det_max() + i * det_step(); }
  double beta_step() const { return beta_extent_ / n_beta_; }
  double beta(int j) const { return j * beta_step(); }

  /// Fan angle of the ray at detector coordinate u.
  double fan_angle(double u) const;

  double operator()(int j, int i) const { return data_[static_cast<std::size_t>(j) * n_det_ + i]; }
  double& operator()(int j, int i) { return data_[static_cast<std::size_t>(j) * n_det_ + i]; }

  std::span<const double> row(int j) const { return {data_.data() + static_cast<std::size_t>(j) * n_det_, static_cast<std::size_t>(n_det_)}; }
  std::span<double> row(int j) { return {data_.data() + static_cast<std::size_t>(j) * n_det_, static_cast<std::size_t>(n_det_)}; }
  std::span<const double> values() const { return data_; }
  std::span<double> values() { return data_; }

 private:
  FanGeometry geometry_;
  int n_det_ = 0;
  int n_beta_ = 0;
  double beta_extent_ = 0.0;
  std::vector<double> data_;
};

using StandardFanSinogram = FanSinogram<FanKind::standard>;
using LinearFanSinogram = FanSinogram<FanKind::linear>;

/// Complex samples over (sigma, theta) in [0, sigma_max] x [0, 2pi).
/// sigma_k = k * sigma_max / (n_sigma - 1), theta_j = 2 pi j / n_theta.
class PolarSpectrum {
 public:
  PolarSpectrum() = default;
  PolarSpectrum(int n_sigma, int n_theta, double sigma_max);

  int n_sigma() const { return n_sigma_; }
  int n_theta() const { return n_theta_; }
  double sigma_max() const { return sigma_max_; }
  double sigma_step() const { return n_sigma_ > 1 ? sigma_max_ / (n_sigma_ - 1) : 0.0; }
  double sigma(int k) const { return k * sigma_step(); }
  double theta_step() const { return kTwoPi / n_theta_; }
  double theta(int j) const { return j * theta_step(); }

  std::complex<double> operator()(int j, int k) const { return data_[static_cast<std::size_t>(j) * n_sigma_ + k]; }
  std::complex<double>& operator()(int j, int k) { return data_[static_cast<std::size_t>(j) * n_sigma_ + k]; }

  std::span<const std::complex<double>> values() const { return data_; }
  std::span<std::complex<double>> values() { return data_; }

 private:
  int n_sigma_ = 0;
  int n_theta_ = 0;
  double sigma_max_ = 0.0;
  std::vector<std::complex<double>> data_;
};

/// Caps the number of worker threads used by the library (<= 0 restores the
/// machine default).
void set_thread_count(int threads);
int thread_count();

}  // namespace fanbp
