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

// Command-line front end: phantom, project, backproject, bench.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fanbp/backproj_reference.hpp"
#include "fanbp/bench.hpp"
#include "fanbp/bessel_backproj.hpp"
#include "fanbp/bst.hpp"
#include "fanbp/filtering.hpp"
#include "fanbp/grid_file.hpp"
#include "fanbp/phantom.hpp"
#include "fanbp/radon_forward.hpp"

namespace fs = std::filesystem;
using namespace fanbp;

namespace {

constexpr int kUsage = 2;
constexpr int kInternal = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path with_suffix(const fs::path& path, const std::string& suffix, bool add) {
  if (!add) return path;
  fs::path out = path;
  out.replace_filename(path.stem().string() + "_" + suffix + path.extension().string());
  return out;
}

GridFile load_input(const std::string& path) {
  if (!fs::exists(path)) throw UsageError("input file not found: " + path);
  try {
    return read_grid(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

struct PhantomArgs {
  int n = 0;
  std::string config;
  std::string out;
  bool sinogram = false;
  int n_theta = 0;
  std::string pgm;
};

void run_phantom(const PhantomArgs& a) {
  if (a.n < 1) throw UsageError("--n must be positive");
  Phantom phantom;
  if (a.config.empty()) {
    phantom = default_phantom();
  } else {
    try {
      phantom = load_phantom(a.config);
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }
  if (a.sinogram) {
    if (a.n < 2) throw UsageError("--n must be >= 2 for a sinogram");
    const int n_theta = a.n_theta > 0 ? a.n_theta : a.n;
    write_grid(a.out, to_grid(analytic_radon(phantom, a.n, n_theta)));
  } else {
    const ImageGrid img = rasterize(phantom, a.n);
    write_grid(a.out, to_grid(img));
    if (!a.pgm.empty()) write_pgm(a.pgm, img);
  }
}

struct ProjectArgs {
  std::string in;
  std::string geometry = "linear";
  double d = 10.0;
  int n_det = 0;
  int n_beta = 0;
  bool full_circle = false;
  std::string out;
};

void run_project(const ProjectArgs& a) {
  if (!(a.d > 1.0)) throw UsageError("--d must exceed 1");
  const GridFile grid = load_input(a.in);
  if (classify(grid, 0.0) != GridKind::parallel) throw UsageError("input is not a parallel sinogram");
  const ParallelSinogram p = parallel_from_grid(grid);
  const FanGeometry geom = make_fan_geometry(a.d);
  const int n_det = a.n_det > 0 ? a.n_det : p.n_t();
  const int n_beta = a.n_beta > 0 ? a.n_beta : (p.span() == AngularSpan::half ? p.n_theta() : p.n_theta() / 2);
  if (n_det < 2 || n_beta < 1) throw UsageError("fan sinogram needs --n-det >= 2 and --n-beta >= 1");
  const double extent = a.full_circle ? kTwoPi : 0.0;
  if (a.geometry == "standard") {
    write_grid(a.out, to_grid(rebin_to_standard(p, geom, n_det, n_beta, extent)));
  } else {
    write_grid(a.out, to_grid(rebin_to_linear(p, geom, n_det, n_beta, extent)));
  }
}

struct BackprojectArgs {
  std::string in;
  std::vector<std::string> methods{"bessel"};
  std::string geometry;
  double d = 10.0;
  int n = 0;
  double eps = 1e-9;
  bool filtered = false;
  std::string out;
  std::optional<int> profile_row;
  std::string profile_csv;
  std::string pgm;
};

ImageGrid backproject_one(const std::string& method, GridKind kind, const GridFile& grid, const BackprojectArgs& a, int n) {
  SeriesOptions series;
  series.eps = a.eps;
  if (a.filtered) {
    FbpOptions fbp;
    fbp.series = series;
    fbp.route = method == "direct" ? FbpRoute::direct : method == "rebin-bst" ? FbpRoute::rebin_bst : FbpRoute::series;
    return fbp_linear_pipeline(parallel_from_grid(grid), make_fan_geometry(a.d), n, fbp);
  }
  switch (kind) {
    case GridKind::parallel: {
      const ParallelSinogram p = parallel_from_grid(grid);
      if (method == "direct") return backproject_parallel(p, n);
      if (method == "rebin-bst") return bst_backproject(p, n);
      throw UsageError("method bessel needs fan-beam input");
    }
    case GridKind::standard_fan: {
      const StandardFanSinogram w = standard_from_grid(grid, a.d);
      if (method == "direct") return backproject_standard_fan(w, n);
      if (method == "rebin-bst") return bst_backproject_standard_fan(w, n);
      return standard_fan_backproject(w, n, series);
    }
    case GridKind::linear_fan: {
      const LinearFanSinogram g = linear_from_grid(grid, a.d);
      if (method == "direct") return backproject_linear_fan(g, n);
      if (method == "rebin-bst") return bst_backproject_linear_fan(g, n);
      return linear_fan_backproject(g, n, series);
    }
    default:
      throw UsageError("input is not a sinogram");
  }
}

void run_backproject(const BackprojectArgs& a) {
  if (!(a.d > 1.0)) throw UsageError("--d must exceed 1");
  if (!(a.eps > 0.0)) throw UsageError("--eps must be positive");
  const GridFile grid = load_input(a.in);
  const GridKind kind = classify(grid, a.d);
  if (kind == GridKind::unknown || kind == GridKind::image) {
    throw UsageError("input axes match no sinogram geometry for d = " + std::to_string(a.d));
  }
  static const std::map<std::string, GridKind> names{
      {"parallel", GridKind::parallel}, {"standard", GridKind::standard_fan}, {"linear", GridKind::linear_fan}};
  if (a.filtered) {
    if (kind != GridKind::parallel) throw UsageError("--filtered expects a parallel sinogram");
    if (!a.geometry.empty() && a.geometry != "linear") throw UsageError("--filtered runs through the linear fan geometry");
  } else if (!a.geometry.empty() && names.at(a.geometry) != kind) {
    throw UsageError("input metadata does not match --geometry " + a.geometry);
  }
  if (!a.filtered && kind == GridKind::parallel) {
    for (const auto& m : a.methods) {
      if (m == "bessel") throw UsageError("method bessel needs fan-beam input");
    }
  }
  const int n = a.n > 0 ? a.n : static_cast<int>(grid.cols);
  if (a.profile_row && (*a.profile_row < 0 || *a.profile_row >= n)) throw UsageError("--profile-row outside the image");

  const bool many = a.methods.size() > 1;
  std::vector<std::vector<double>> profiles;
  for (const auto& m : a.methods) {
    const ImageGrid img = backproject_one(m, kind, grid, a, n);
    write_grid(with_suffix(a.out, m, many), to_grid(img));
    if (!a.pgm.empty()) write_pgm(with_suffix(a.pgm, m, many), img);
    if (a.profile_row) {
      std::vector<double> row(n);
      for (int j = 0; j < n; ++j) row[j] = img(*a.profile_row, j);
      profiles.push_back(std::move(row));
    }
  }
  if (a.profile_row) {
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) x[j] = -1.0 + (2.0 * j + 1.0) / n;
    fs::path csv = a.profile_csv;
    if (csv.empty()) {
      csv = a.out;
      csv.replace_filename(fs::path(a.out).stem().string() + "_profile.csv");
    }
    write_profile_csv(csv, x, a.methods, profiles);
  }
}

struct BenchArgs {
  std::vector<int> sizes{128, 256};
  std::vector<std::string> methods{"direct", "bst"};
  int repetitions = 3;
  double d = 10.0;
  std::string out;
};

void run_bench_command(const BenchArgs& a) {
  if (a.repetitions < 1) throw UsageError("--repetitions must be >= 1");
  for (int s : a.sizes) {
    if (s < 2) throw UsageError("bench sizes must be >= 2");
  }
  const auto rows = run_bench(a.sizes, a.methods, a.repetitions, a.d);
  if (a.out.empty()) {
    write_bench_csv(std::cout, rows);
  } else {
    std::ofstream out(a.out);
    if (!out) throw UsageError("cannot open " + a.out);
    write_bench_csv(out, rows);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fan-beam backprojection toolkit"};
  app.require_subcommand(1);
  int threads = 0;
  unsigned seed = 0;
  app.add_option("--threads", threads, "Worker threads (default: TOMO_THREADS or all cores)");
  app.add_option("--seed", seed, "Seed for randomised steps")->capture_default_str();

  PhantomArgs ph;
  auto* phantom = app.add_subcommand("phantom", "Rasterise a phantom or its analytic parallel sinogram");
  phantom->add_option("--n", ph.n, "Image size (detector samples with --sinogram)")->required();
  phantom->add_option("--config", ph.config, "Ellipse list: cx cy a b rot amp per line");
  phantom->add_option("--out", ph.out, "Output grid file")->required();
  phantom->add_flag("--sinogram", ph.sinogram, "Write the analytic parallel sinogram over [0, pi)");
  phantom->add_option("--n-theta", ph.n_theta, "Angles for --sinogram (default n)");
  phantom->add_option("--pgm", ph.pgm, "PGM preview of the image");

  ProjectArgs pr;
  auto* project = app.add_subcommand("project", "Rebin a parallel sinogram into fan-beam data");
  project->add_option("--in", pr.in, "Parallel sinogram")->required();
  project->add_option("--geometry", pr.geometry)->check(CLI::IsMember({"standard", "linear"}))->capture_default_str();
  project->add_option("--d", pr.d, "Source-origin distance")->capture_default_str();
  project->add_option("--n-det", pr.n_det, "Detector samples (default: input detector count)");
  project->add_option("--n-beta", pr.n_beta, "Source angles (default: input angle count)");
  project->add_flag("--full-circle", pr.full_circle, "Sample beta over [0, 2 pi) instead of the short scan");
  project->add_option("--out", pr.out)->required();

  BackprojectArgs bp;
  auto* backproject = app.add_subcommand("backproject", "Backproject (or reconstruct) a sinogram");
  backproject->add_option("--in", bp.in)->required();
  backproject->add_option("--method", bp.methods, "direct, rebin-bst and/or bessel")
      ->check(CLI::IsMember({"direct", "rebin-bst", "bessel"}))
      ->capture_default_str();
  backproject->add_option("--geometry", bp.geometry)->check(CLI::IsMember({"parallel", "standard", "linear"}));
  backproject->add_option("--d", bp.d)->capture_default_str();
  backproject->add_option("--n", bp.n, "Image size (default: detector count)");
  backproject->add_option("--eps", bp.eps, "Series truncation tolerance")->capture_default_str();
  backproject->add_flag("--filtered", bp.filtered, "Ramp-filter a parallel sinogram, rebin to linear fan, reconstruct");
  backproject->add_option("--out", bp.out)->required();
  backproject->add_option("--profile-row", bp.profile_row, "Image row written to the profile CSV");
  backproject->add_option("--profile-csv", bp.profile_csv);
  backproject->add_option("--pgm", bp.pgm);

  BenchArgs be;
  auto* bench = app.add_subcommand("bench", "Time backprojection methods");
  // Read as text: CLI11 turns a bare --sizes into a placeholder value rather
  // than an empty list.
  std::vector<std::string> size_text;
  auto* sizes = bench->add_option("--sizes", size_text, "Image sizes (default: 128 256; none for an empty run)")
                    ->expected(0, -1);
  bench->add_option("--methods", be.methods)->check(CLI::IsMember(bench_methods()))->capture_default_str();
  bench->add_option("--repetitions", be.repetitions)->capture_default_str();
  bench->add_option("--d", be.d)->capture_default_str();
  bench->add_option("--out", be.out, "CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (threads <= 0) {
      if (const char* env = std::getenv("TOMO_THREADS")) threads = std::atoi(env);
    }
    if (threads < 0) throw UsageError("--threads must be non-negative");
    set_thread_count(threads);

    if (*phantom) run_phantom(ph);
    if (*project) run_project(pr);
    if (*backproject) run_backproject(bp);
    if (*bench) {
      if (sizes->count() > 0) {
        be.sizes.clear();
        for (const auto& t : size_text) {
          if (t.empty() || t == "{}") continue;
          try {
            std::size_t used = 0;
            be.sizes.push_back(std::stoi(t, &used));
            if (used != t.size()) throw std::invalid_argument(t);
          } catch (const std::logic_error&) {
            throw UsageError("--sizes expects integers, got " + t);
          }
        }
      }
      run_bench_command(be);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return 0;
}
