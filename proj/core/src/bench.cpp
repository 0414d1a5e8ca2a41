#include "eikonal/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "eikonal/experiments.hpp"

namespace eikonal {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> resolve_points(const ExperimentSpec& spec) {
  std::vector<double> points;
  switch (spec.family) {
    case Family::Empty: {
      std::vector<std::size_t> cells =
          spec.cells.empty() ? default_cells_ladder(spec.ndims) : spec.cells;
      for (std::size_t c : cells) {
        const std::size_t scaled = c / spec.scale;
        if (scaled >= 2) points.push_back(static_cast<double>(scaled));
      }
      break;
    }
    case Family::Barriers: {
      if (spec.barriers.empty()) {
        for (std::size_t b = 0; b <= 9; ++b) points.push_back(static_cast<double>(b));
      } else {
        for (std::size_t b : spec.barriers) points.push_back(static_cast<double>(b));
      }
      break;
    }
    case Family::Random:
    case Family::Checkerboard: {
      std::vector<double> fmax =
          spec.fmax_values.empty() ? default_fmax_ladder() : spec.fmax_values;
      points = std::move(fmax);
      break;
    }
  }
  if (points.empty())
    throw std::invalid_argument(
        "run_experiment: no parameter points survive the experiment spec");
  return points;
}

std::size_t velocity_extent(const ExperimentSpec& spec) {
  const std::size_t base =
      spec.cells.empty() ? default_velocity_extent(spec.ndims) : spec.cells.front();
  const std::size_t scaled = base / spec.scale;
  if (scaled < 2)
    throw std::invalid_argument("run_experiment: scale leaves too few cells");
  return scaled;
}

Grid build_grid(const ExperimentSpec& spec, double param) {
  switch (spec.family) {
    case Family::Empty:
      return gen_empty(spec.ndims, static_cast<std::size_t>(param));
    case Family::Barriers:
      return gen_barriers(spec.ndims, static_cast<std::size_t>(param), spec.scale);
    case Family::Random:
      return gen_random(spec.ndims, velocity_extent(spec), param, spec.seed);
    case Family::Checkerboard:
      return gen_checkerboard(spec.ndims, velocity_extent(spec), param,
                              spec.divisions);
  }
  throw std::invalid_argument("run_experiment: unknown family");
}

Index start_cell(const ExperimentSpec& spec, const Grid& grid) {
  StartMode mode = spec.start;
  if (mode == StartMode::FamilyDefault)
    mode = (spec.family == Family::Barriers) ? StartMode::NearCorner
                                             : StartMode::Center;
  return mode == StartMode::NearCorner ? near_corner_cell(grid)
                                       : center_cell(grid);
}

SolverParams effective_params(const ExperimentSpec& spec) {
  SolverParams p = spec.params;
  if (spec.family == Family::Checkerboard && !spec.untidy_overridden) {
    // The steep velocity contrasts of the checkerboard need much finer
    // buckets in 3D/4D for the untidy queue to stay within its error bound.
    if (spec.ndims == 3) p.untidy = UntidyConfig{1000, 0.01};
    if (spec.ndims == 4) p.untidy = UntidyConfig{20000, 0.025};
  }
  return p;
}

struct Measurement {
  std::vector<double> run_seconds;
  double mean = 0.0;
  double stddev = 0.0;
};

/// One warm-up run (discarded) plus spec.runs measured runs.
Measurement measure(SolverKind kind, Grid& grid, std::span<const Index> sources,
                    const SolverParams& params, std::size_t runs) {
  Measurement m;
  solve(kind, grid, sources, params);  // warm-up: caches, page faults
  m.run_seconds.reserve(runs);
  for (std::size_t r = 0; r < runs; ++r)
    m.run_seconds.push_back(solve(kind, grid, sources, params).propagation_seconds);
  double sum = 0.0;
  for (double s : m.run_seconds) sum += s;
  m.mean = sum / static_cast<double>(runs);
  if (runs > 1) {
    double sq = 0.0;
    for (double s : m.run_seconds) sq += (s - m.mean) * (s - m.mean);
    m.stddev = std::sqrt(sq / static_cast<double>(runs - 1));
  }
  return m;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Empty: return "empty";
    case Family::Barriers: return "barriers";
    case Family::Random: return "random";
    case Family::Checkerboard: return "checkerboard";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (Family f : {Family::Empty, Family::Barriers, Family::Random,
                   Family::Checkerboard})
    if (lower == family_name(f)) return f;
  return std::nullopt;
}

std::vector<std::size_t> default_cells_ladder(std::size_t ndims) {
  switch (ndims) {
    case 2:
      return {50, 100, 200, 400, 800, 1000, 1500, 2000, 2500, 3000, 4000};
    case 3:
      return {14, 22, 34, 54, 86, 100, 131, 159, 184, 208, 252};
    case 4:
      return {7, 10, 14, 20, 28, 32, 39, 45, 50, 55, 63};
    default:
      throw std::invalid_argument("default_cells_ladder: ladders exist for 2D/3D/4D");
  }
}

std::size_t default_velocity_extent(std::size_t ndims) {
  switch (ndims) {
    case 2: return 2000;
    case 3: return 159;
    case 4: return 45;
    default:
      throw std::invalid_argument("default_velocity_extent: defined for 2D/3D/4D");
  }
}

std::vector<double> default_fmax_ladder() {
  return {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
}

std::vector<BenchRecord> run_experiment(const ExperimentSpec& spec) {
  if (spec.runs == 0)
    throw std::invalid_argument("run_experiment: runs must be at least 1");
  if (spec.solvers.empty())
    throw std::invalid_argument("run_experiment: no solvers requested");

  const std::string experiment =
      spec.name.empty()
          ? std::string(family_name(spec.family)) + "-" +
                std::to_string(spec.ndims) + "d"
          : spec.name;
  const SolverParams params = effective_params(spec);

  std::vector<BenchRecord> records;
  for (double param : resolve_points(spec)) {
    Grid grid = build_grid(spec, param);
    const Index source = start_cell(spec, grid);
    const std::span<const Index> sources(&source, 1);

    // FMM is always measured as the ratio/error reference.
    const Measurement fmm = measure(SolverKind::FMM, grid, sources, params, spec.runs);
    const std::vector<double> reference(grid.times().begin(), grid.times().end());

    for (SolverKind kind : spec.solvers) {
      BenchRecord rec;
      rec.experiment = experiment;
      rec.family = spec.family;
      rec.ndims = spec.ndims;
      rec.param = param;
      rec.solver = kind;
      try {
        if (kind == SolverKind::FMM) {
          rec.run_seconds = fmm.run_seconds;
          rec.mean_s = fmm.mean;
          rec.stddev_s = fmm.stddev;
          rec.ratio_vs_fmm = 1.0;
        } else {
          const Measurement m = measure(kind, grid, sources, params, spec.runs);
          rec.run_seconds = m.run_seconds;
          rec.mean_s = m.mean;
          rec.stddev_s = m.stddev;
          rec.ratio_vs_fmm = m.mean / fmm.mean;
          const ErrorNorms err =
              error_norms(grid.times(), reference, grid.spacing(), grid.ndims());
          rec.l1_err = err.l1;
          rec.linf_err = err.linf;
        }
      } catch (const std::exception& e) {
        rec.ok = false;
        rec.error = e.what();
        rec.mean_s = rec.stddev_s = rec.ratio_vs_fmm = kNaN;
        rec.l1_err = rec.linf_err = kNaN;
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

namespace {

std::string format_param(double param) {
  char buf[32];
  if (param == std::floor(param) && std::abs(param) < 1e15)
    std::snprintf(buf, sizeof(buf), "%.0f", param);
  else
    std::snprintf(buf, sizeof(buf), "%g", param);
  return buf;
}

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9e", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "experiment,family,ndims,param,solver,run_mean_s,run_stddev_s,"
         "ratio_vs_fmm,l1_err,linf_err\n";
  for (const BenchRecord& r : records) {
    out << r.experiment << ',' << family_name(r.family) << ',' << r.ndims << ','
        << format_param(r.param) << ',' << solver_name(r.solver) << ','
        << format_sci(r.mean_s) << ',' << format_sci(r.stddev_s) << ','
        << format_sci(r.ratio_vs_fmm) << ',' << format_sci(r.l1_err) << ','
        << format_sci(r.linf_err) << '\n';
  }
}

void write_summary(std::ostream& out, std::span<const BenchRecord> records) {
  char line[256];
  std::snprintf(line, sizeof(line), "%-16s %-12s %5s %8s %-7s %12s %9s %12s",
                "experiment", "family", "ndims", "param", "solver", "mean_ms",
                "ratio", "linf_err");
  out << line << '\n';
  for (const BenchRecord& r : records) {
    if (!r.ok) {
      std::snprintf(line, sizeof(line), "%-16s %-12s %5zu %8s %-7s ERROR: %s",
                    r.experiment.c_str(), family_name(r.family).data(), r.ndims,
                    format_param(r.param).c_str(), solver_name(r.solver).data(),
                    r.error.c_str());
    } else {
      std::snprintf(line, sizeof(line),
                    "%-16s %-12s %5zu %8s %-7s %12.4f %9.3f %12.3e",
                    r.experiment.c_str(), family_name(r.family).data(), r.ndims,
                    format_param(r.param).c_str(), solver_name(r.solver).data(),
                    r.mean_s * 1e3, r.ratio_vs_fmm, r.linf_err);
    }
    out << line << '\n';
  }
}

}  // namespace eikonal
