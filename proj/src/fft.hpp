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
#include <span>

#include <fftw3.h>

namespace fanbp::detail {

enum class FftDirection { forward, backward };

/// In-place 1D complex transform plan. Unnormalised, FFTW sign convention
/// (forward is e^{-i...}). `execute` may be called concurrently from several
/// threads on distinct buffers.
class Fft1d {
 public:
  Fft1d(int n, FftDirection direction);
  ~Fft1d();
  Fft1d(const Fft1d&) = delete;
  Fft1d& operator=(const Fft1d&) = delete;

  int size() const { return n_; }
  void execute(std::span<std::complex<double>> data) const;

 private:
  int n_;
  fftw_plan plan_;
};

/// In-place 2D complex transform on a rows x cols row-major buffer.
class Fft2d {
 public:
  Fft2d(int rows, int cols, FftDirection direction);
  ~Fft2d();
  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  void execute(std::span<std::complex<double>> data) const;

 private:
  int rows_;
  int cols_;
  fftw_plan plan_;
};

}  // namespace fanbp::detail
