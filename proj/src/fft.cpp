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

#include "fft.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace fanbp::detail {

namespace {

// Planning is not thread-safe in FFTW; execution with the new-array
// interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

int sign_of(FftDirection d) { return d == FftDirection::forward ? FFTW_FORWARD : FFTW_BACKWARD; }

}  // namespace

Fft1d::Fft1d(int n, FftDirection direction) : n_(n) {
  if (n < 1) throw std::invalid_argument("FFT size must be positive");
  std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n));
  std::lock_guard lock(planner_mutex());
  plan_ = fftw_plan_dft_1d(n, as_fftw(scratch.data()), as_fftw(scratch.data()), sign_of(direction),
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (plan_ == nullptr) throw std::runtime_error("FFTW failed to create a 1D plan");
}

Fft1d::~Fft1d() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan_);
}

void Fft1d::execute(std::span<std::complex<double>> data) const {
  if (static_cast<int>(data.size()) != n_) throw std::invalid_argument("FFT buffer size mismatch");
  fftw_execute_dft(plan_, as_fftw(data.data()), as_fftw(data.data()));
}

Fft2d::Fft2d(int rows, int cols, FftDirection direction) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("FFT size must be positive");
  std::vector<std::complex<double>> scratch(static_cast<std::size_t>(rows) * cols);
  std::lock_guard lock(planner_mutex());
  plan_ = fftw_plan_dft_2d(rows, cols, as_fftw(scratch.data()), as_fftw(scratch.data()), sign_of(direction),
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (plan_ == nullptr) throw std::runtime_error("FFTW failed to create a 2D plan");
}

Fft2d::~Fft2d() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan_);
}

void Fft2d::execute(std::span<std::complex<double>> data) const {
  if (data.size() != static_cast<std::size_t>(rows_) * cols_) throw std::invalid_argument("FFT buffer size mismatch");
  fftw_execute_dft(plan_, as_fftw(data.data()), as_fftw(data.data()));
}

}  // namespace fanbp::detail
