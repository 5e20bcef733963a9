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

#include "fanbp/grid_file.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace fanbp {

namespace {

constexpr char kMagic[8] = {'T', 'O', 'M', 'O', 'G', 'R', 'D', '1'};

template <typename T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    std::reverse(b, b + sizeof(T));
    std::memcpy(&v, b, sizeof(T));
  }
  return v;
}

template <typename T>
void put(std::ostream& out, T v) {
  v = to_little(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw std::runtime_error("truncated grid file header");
  return to_little(v);
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

void require_shape(const GridFile& g) {
  if (g.rows < 1 || g.cols < 1) throw std::runtime_error("grid file has an empty axis");
  if (g.data.size() != static_cast<std::size_t>(g.rows) * g.cols) throw std::runtime_error("grid payload size mismatch");
}

template <FanKind Kind>
GridFile fan_grid(const FanSinogram<Kind>& w) {
  GridFile g;
  g.rows = w.n_beta();
  g.cols = w.n_det();
  g.axis0_min = 0.0;
  g.axis0_max = w.beta_extent();
  g.axis1_min = -w.det_max();
  g.axis1_max = w.det_max();
  g.data.assign(w.values().begin(), w.values().end());
  return g;
}

template <FanKind Kind>
FanSinogram<Kind> fan_from_grid(const GridFile& g, double d) {
  require_shape(g);
  const FanGeometry geom = make_fan_geometry(d);
  const GridKind want = Kind == FanKind::standard ? GridKind::standard_fan : GridKind::linear_fan;
  if (classify(g, d) != want) throw std::runtime_error("grid axes do not match the requested fan geometry");
  FanSinogram<Kind> w(geom, g.cols, g.rows, g.axis0_max);
  std::copy(g.data.begin(), g.data.end(), w.values().begin());
  return w;
}

}  // namespace

void write_grid(const std::filesystem::path& path, const GridFile& grid) {
  require_shape(grid);
  if (grid.dtype != GridFile::kFloat64) throw std::runtime_error("unsupported grid dtype");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(kMagic, sizeof(kMagic));
  put(out, grid.dtype);
  put(out, grid.rows);
  put(out, grid.cols);
  put(out, grid.axis0_min);
  put(out, grid.axis0_max);
  put(out, grid.axis1_min);
  put(out, grid.axis1_max);
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(grid.data.data()), static_cast<std::streamsize>(grid.data.size() * sizeof(double)));
  } else {
    for (double v : grid.data) put(out, v);
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

GridFile read_grid(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) throw std::runtime_error("not a TOMOGRD1 file: " + path.string());
  GridFile g;
  g.dtype = get<std::uint32_t>(in);
  if (g.dtype != GridFile::kFloat64) throw std::runtime_error("unsupported grid dtype " + std::to_string(g.dtype));
  g.rows = get<std::uint32_t>(in);
  g.cols = get<std::uint32_t>(in);
  g.axis0_min = get<double>(in);
  g.axis0_max = get<double>(in);
  g.axis1_min = get<double>(in);
  g.axis1_max = get<double>(in);
  const std::size_t count = static_cast<std::size_t>(g.rows) * g.cols;
  g.data.resize(count);
  in.read(reinterpret_cast<char*>(g.data.data()), static_cast<std::streamsize>(count * sizeof(double)));
  if (static_cast<std::size_t>(in.gcount()) != count * sizeof(double)) throw std::runtime_error("truncated grid payload");
  if (in.peek() != std::char_traits<char>::eof()) throw std::runtime_error("trailing bytes after grid payload");
  for (double& v : g.data) v = to_little(v);
  return g;
}

GridKind classify(const GridFile& g, double d) {
  if (close(g.axis0_min, -1.0) && close(g.axis0_max, 1.0) && close(g.axis1_min, -1.0) && close(g.axis1_max, 1.0) &&
      g.rows == g.cols) {
    return GridKind::image;
  }
  if (!close(g.axis0_min, 0.0) || !close(g.axis1_min, -g.axis1_max)) return GridKind::unknown;
  if (close(g.axis1_max, 1.0) && (close(g.axis0_max, kPi) || close(g.axis0_max, kTwoPi))) return GridKind::parallel;
  if (d > 1.0) {
    const FanGeometry geom = make_fan_geometry(d);
    const bool span_ok = g.axis0_max >= geom.beta_span * (1.0 - 1e-9) && g.axis0_max <= kTwoPi * (1.0 + 1e-9);
    if (span_ok && close(g.axis1_max, geom.gamma_max)) return GridKind::standard_fan;
    if (span_ok && close(g.axis1_max, geom.s_max)) return GridKind::linear_fan;
  }
  return GridKind::unknown;
}

GridFile to_grid(const ImageGrid& img) {
  GridFile g;
  g.rows = g.cols = img.size();
  g.axis0_min = g.axis1_min = -1.0;
  g.axis0_max = g.axis1_max = 1.0;
  g.data.assign(img.values().begin(), img.values().end());
  return g;
}

GridFile to_grid(const ParallelSinogram& p) {
  GridFile g;
  g.rows = p.n_theta();
  g.cols = p.n_t();
  g.axis0_min = 0.0;
  g.axis0_max = p.theta_extent();
  g.axis1_min = -1.0;
  g.axis1_max = 1.0;
  g.data.assign(p.values().begin(), p.values().end());
  return g;
}

GridFile to_grid(const StandardFanSinogram& w) { return fan_grid(w); }
GridFile to_grid(const LinearFanSinogram& g) { return fan_grid(g); }

ImageGrid image_from_grid(const GridFile& g) {
  require_shape(g);
  if (classify(g, 0.0) != GridKind::image) throw std::runtime_error("grid is not a square image on [-1,1]^2");
  return ImageGrid(static_cast<int>(g.rows), g.data);
}

ParallelSinogram parallel_from_grid(const GridFile& g) {
  require_shape(g);
  if (classify(g, 0.0) != GridKind::parallel) throw std::runtime_error("grid is not a parallel sinogram");
  if (g.cols < 2) throw std::runtime_error("parallel sinogram needs at least two detector samples");
  const AngularSpan span = close(g.axis0_max, kPi) ? AngularSpan::half : AngularSpan::full;
  ParallelSinogram p(g.cols, g.rows, span);
  std::copy(g.data.begin(), g.data.end(), p.values().begin());
  return p;
}

StandardFanSinogram standard_from_grid(const GridFile& g, double d) { return fan_from_grid<FanKind::standard>(g, d); }
LinearFanSinogram linear_from_grid(const GridFile& g, double d) { return fan_from_grid<FanKind::linear>(g, d); }

void write_pgm(const std::filesystem::path& path, const ImageGrid& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const int n = img.size();
  out << "P5\n" << n << ' ' << n << "\n255\n";
  const auto v = img.values();
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double range = *hi - *lo;
  // Row 0 is the bottom of the image (smallest x2); PGM starts at the top.
  for (int i = n - 1; i >= 0; --i) {
    for (int j = 0; j < n; ++j) {
      const double s = range > 0.0 ? (img(i, j) - *lo) / range : 0.0;
      out.put(static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * s))));
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_profile_csv(const std::filesystem::path& path, const std::vector<double>& x, const std::vector<std::string>& names,
                       const std::vector<std::vector<double>>& profiles) {
  if (names.size() != profiles.size()) throw std::invalid_argument("one name per profile");
  for (const auto& p : profiles) {
    if (p.size() != x.size()) throw std::invalid_argument("profile length mismatch");
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "x1";
  for (const auto& name : names) out << ',' << name;
  out << '\n';
  out.precision(17);
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << x[i];
    for (const auto& p : profiles) out << ',' << p[i];
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace fanbp
