#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eikonal/solvers.hpp"

namespace eikonal {

/// The four benchmark scenario families.
enum class Family { Empty, Barriers, Random, Checkerboard };

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

enum class StartMode {
  FamilyDefault,  // center, except Barriers which starts near a corner
  Center,
  NearCorner,
};

/// One benchmark scenario: a family swept over its parameter points with a
/// set of solvers.
///
/// The varying parameter depends on the family: Empty sweeps cells-per-axis
/// (the `cells` list, defaulting to the built-in per-dimension ladder),
/// Barriers sweeps the barrier count (`barriers`, default 0..9), and
/// Random/Checkerboard sweep the maximum velocity (`fmax_values`, default
/// 10..100 in steps of 10) at a fixed grid size (first entry of `cells`,
/// defaulting to the family's full-resolution extent).
///
/// `scale` divides every grid extent so full ladders stay desk-sized;
/// points whose extents would drop below 2 cells are skipped.
struct ExperimentSpec {
  std::string name;  // experiment id in output; empty -> "<family>-<N>d"
  Family family = Family::Empty;
  std::size_t ndims = 2;
  std::size_t scale = 1;
  std::vector<std::size_t> cells;
  std::vector<std::size_t> barriers;
  std::vector<double> fmax_values;
  std::size_t divisions = 10;
  std::uint64_t seed = 42;
  StartMode start = StartMode::FamilyDefault;
  std::vector<SolverKind> solvers{kAllSolvers.begin(), kAllSolvers.end()};
  std::size_t runs = 10;
  SolverParams params;
  /// When false, UFMM uses the checkerboard presets for 3D (1000 buckets,
  /// range 0.01) and 4D (20000 buckets, range 0.025); set true when the
  /// user supplied an explicit bucket configuration.
  bool untidy_overridden = false;
};

/// One CSV row: a solver at one parameter point, aggregated over the runs.
struct BenchRecord {
  std::string experiment;
  Family family = Family::Empty;
  std::size_t ndims = 0;
  double param = 0.0;  // cells-per-axis, barrier count, or fmax
  SolverKind solver = SolverKind::FMM;
  std::vector<double> run_seconds;  // per measured run, warm-up excluded
  double mean_s = 0.0;
  double stddev_s = 0.0;        // sample stddev; 0 for a single run
  double ratio_vs_fmm = 0.0;    // mean_s / FMM mean_s on identical input
  double l1_err = 0.0;          // error norms vs the FMM field
  double linf_err = 0.0;
  bool ok = true;
  std::string error;  // diagnostic when !ok (numeric fields are NaN)
};

/// Runs the scenario: for every parameter point, generates the grid once,
/// measures FMM as the reference (one warm-up run plus `runs` timed runs),
/// then measures each requested solver the same way and compares its field
/// against the FMM field. A solver failure (for example an UFMM bucket
/// range overflow) yields an error row for that solver, not an exception.
/// Throws std::invalid_argument for an inconsistent spec (no solvers,
/// runs == 0, a family/ndims combination the generators reject, or a scale
/// that eliminates every parameter point).
std::vector<BenchRecord> run_experiment(const ExperimentSpec& spec);

/// Writes records as CSV with the fixed header
/// experiment,family,ndims,param,solver,run_mean_s,run_stddev_s,ratio_vs_fmm,l1_err,linf_err
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

/// Human-readable fixed-width table of the same records.
void write_summary(std::ostream& out, std::span<const BenchRecord> records);

/// Built-in cells-per-axis ladders (2D/3D/4D) used by the Empty family;
/// chosen so each rung has about the same total cell count across
/// dimensions. Throws std::invalid_argument for other dimension counts.
std::vector<std::size_t> default_cells_ladder(std::size_t ndims);

/// Fixed full-resolution extent of the Random/Checkerboard families.
std::size_t default_velocity_extent(std::size_t ndims);

/// Default maximum-velocity sweep: 10, 20, ..., 100.
std::vector<double> default_fmax_ladder();

}  // namespace eikonal
