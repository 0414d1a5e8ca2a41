// eik: command-line front end for the eikonal solver library.
//
//   eik generate  build a velocity grid file from a scenario family
//   eik solve     run one solver on a grid file, write the arrival times
//   eik bench     run a benchmark suite and emit CSV
//   eik compare   diff two arrival-time files under tolerances
//
// Exit codes: 0 success, 1 tolerance/equivalence failure, 2 usage or
// file-format error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eikonal/bench.hpp"
#include "eikonal/experiments.hpp"
#include "eikonal/grid_io.hpp"
#include "eikonal/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

eikonal::SolverKind parse_solver_or_throw(const std::string& name) {
  if (auto kind = eikonal::parse_solver(name)) return *kind;
  throw CLI::ValidationError("--solver", "unknown solver \"" + name + "\"");
}

/// --sources entries: "center", "corner", or an N-tuple "c0,c1,...".
std::vector<eikonal::Index> parse_sources(const std::vector<std::string>& specs,
                                          const eikonal::Grid& grid) {
  std::vector<eikonal::Index> cells;
  for (const std::string& spec : specs) {
    if (spec == "center") {
      cells.push_back(eikonal::center_cell(grid));
      continue;
    }
    if (spec == "corner") {
      cells.push_back(eikonal::near_corner_cell(grid));
      continue;
    }
    std::vector<std::size_t> coords;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
      try {
        coords.push_back(std::stoull(token));
      } catch (const std::exception&) {
        throw CLI::ValidationError("--sources",
                                   "bad coordinate \"" + token + "\" in \"" + spec + "\"");
      }
    }
    try {
      cells.push_back(grid.flat_index(coords));
    } catch (const std::out_of_range& e) {
      throw CLI::ValidationError("--sources", std::string(e.what()));
    }
  }
  return cells;
}

/// --solver entries: "all" or comma-joined solver names, repeatable.
std::vector<eikonal::SolverKind> parse_solver_list(
    const std::vector<std::string>& specs) {
  std::vector<eikonal::SolverKind> kinds;
  for (const std::string& spec : specs) {
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (token == "all") {
        kinds.assign(eikonal::kAllSolvers.begin(), eikonal::kAllSolvers.end());
        return kinds;
      }
      kinds.push_back(parse_solver_or_throw(token));
    }
  }
  return kinds;
}

struct SolveArgs {
  std::string input;
  std::string output;
  std::string solver = "fmm";
  std::vector<std::string> sources{"center"};
  std::size_t buckets = 1000;
  double trange = 2.0;
  double epsilon = 0.0;
};

int cmd_solve(const SolveArgs& args) {
  eikonal::Grid grid = eikonal::read_grid(args.input);
  const eikonal::SolverKind kind = parse_solver_or_throw(args.solver);
  const std::vector<eikonal::Index> sources = parse_sources(args.sources, grid);
  eikonal::SolverParams params;
  params.untidy = eikonal::UntidyConfig{args.buckets, args.trange};
  params.fim_epsilon = args.epsilon;

  const eikonal::SolverStats stats = eikonal::solve(kind, grid, sources, params);
  if (!args.output.empty()) eikonal::write_time_field(args.output, grid);

  std::cout << "solver: " << eikonal::solver_name(kind) << '\n'
            << "cells: " << grid.size() << '\n'
            << "propagation_time_s: " << stats.propagation_seconds << '\n';
  return kExitOk;
}

struct GenerateArgs {
  std::string family = "empty";
  std::size_t ndims = 2;
  std::size_t cells = 100;
  std::size_t barriers = 9;
  std::size_t scale = 1;
  double fmax = 10.0;
  std::uint64_t seed = 42;
  std::size_t divisions = 10;
  std::string output;
};

int cmd_generate(const GenerateArgs& args) {
  const auto family = eikonal::parse_family(args.family);
  if (!family)
    throw CLI::ValidationError("--family", "unknown family \"" + args.family + "\"");
  eikonal::Grid grid = [&] {
    switch (*family) {
      case eikonal::Family::Empty:
        return eikonal::gen_empty(args.ndims, args.cells);
      case eikonal::Family::Barriers:
        return eikonal::gen_barriers(args.ndims, args.barriers, args.scale);
      case eikonal::Family::Random:
        return eikonal::gen_random(args.ndims, args.cells, args.fmax, args.seed);
      case eikonal::Family::Checkerboard:
      default:
        return eikonal::gen_checkerboard(args.ndims, args.cells, args.fmax,
                                         args.divisions);
    }
  }();
  eikonal::write_grid(args.output, grid);

  std::cout << "family: " << eikonal::family_name(*family) << '\n' << "dims:";
  for (std::size_t extent : grid.dims()) std::cout << ' ' << extent;
  std::cout << '\n' << "h: " << grid.spacing() << '\n';
  return kExitOk;
}

struct BenchArgs {
  std::string name;
  std::string family = "empty";
  std::size_t ndims = 2;
  std::size_t scale = 1;
  std::vector<std::size_t> cells;
  std::vector<std::size_t> barriers;
  std::vector<double> fmax;
  std::size_t divisions = 10;
  std::uint64_t seed = 42;
  std::string start = "default";
  std::vector<std::string> solvers{"all"};
  std::size_t runs = 10;
  std::size_t buckets = 0;  // 0 = family default
  double trange = 0.0;
  double epsilon = 0.0;
  std::string output;
};

int cmd_bench(const BenchArgs& args) {
  eikonal::ExperimentSpec spec;
  spec.name = args.name;
  const auto family = eikonal::parse_family(args.family);
  if (!family)
    throw CLI::ValidationError("--family", "unknown family \"" + args.family + "\"");
  spec.family = *family;
  spec.ndims = args.ndims;
  spec.scale = args.scale;
  spec.cells = args.cells;
  spec.barriers = args.barriers;
  spec.fmax_values = args.fmax;
  spec.divisions = args.divisions;
  spec.seed = args.seed;
  if (args.start == "default") {
    spec.start = eikonal::StartMode::FamilyDefault;
  } else if (args.start == "center") {
    spec.start = eikonal::StartMode::Center;
  } else if (args.start == "corner") {
    spec.start = eikonal::StartMode::NearCorner;
  } else {
    throw CLI::ValidationError("--start", "expected default, center, or corner");
  }
  spec.solvers = parse_solver_list(args.solvers);
  spec.runs = args.runs;
  spec.params.fim_epsilon = args.epsilon;
  if (args.buckets != 0 || args.trange != 0.0) {
    eikonal::UntidyConfig config;
    if (args.buckets != 0) config.buckets = args.buckets;
    if (args.trange != 0.0) config.t_range = args.trange;
    spec.params.untidy = config;
    spec.untidy_overridden = true;
  }

  const std::vector<eikonal::BenchRecord> records = eikonal::run_experiment(spec);

  if (args.output.empty()) {
    eikonal::write_csv(std::cout, records);
  } else {
    std::ofstream out(args.output);
    if (!out) {
      std::cerr << "eik bench: cannot open " << args.output << " for writing\n";
      return kExitUsage;
    }
    eikonal::write_csv(out, records);
  }
  eikonal::write_summary(std::cerr, records);

  for (const eikonal::BenchRecord& r : records)
    if (!r.ok) return kExitMismatch;  // error rows: suite completed, flag it
  return kExitOk;
}

struct CompareArgs {
  std::string field_a;
  std::string field_b;
  double tol_l1 = 0.0;
  double tol_linf = 0.0;
};

int cmd_compare(const CompareArgs& args) {
  const eikonal::TimeField a = eikonal::read_time_field(args.field_a);
  const eikonal::TimeField b = eikonal::read_time_field(args.field_b);
  if (a.dims != b.dims) {
    std::cerr << "eik compare: grid shapes differ\n";
    return kExitUsage;
  }
  if (a.h != b.h) {
    std::cerr << "eik compare: cell spacings differ\n";
    return kExitUsage;
  }

  eikonal::ErrorNorms err;
  try {
    err = eikonal::error_norms(a.values, b.values, a.h, a.ndims());
  } catch (const std::invalid_argument& e) {
    // One field reaches a cell the other leaves at +inf: not comparable
    // under any tolerance.
    std::cerr << "eik compare: " << e.what() << '\n';
    return kExitMismatch;
  }

  char line[64];
  std::snprintf(line, sizeof(line), "l1_error: %.12e", err.l1);
  std::cout << line << '\n';
  std::snprintf(line, sizeof(line), "linf_error: %.12e", err.linf);
  std::cout << line << '\n';

  const bool ok = err.l1 <= args.tol_l1 && err.linf <= args.tol_linf;
  std::cout << "result: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fast Methods for the Eikonal equation on Cartesian grids"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve a velocity grid file");
  solve->add_option("--input", solve_args.input, "EIKGRID input path")->required();
  solve->add_option("--output", solve_args.output, "EIKTIME output path");
  solve->add_option("--solver", solve_args.solver, "Solver name (default fmm)");
  solve->add_option("--sources", solve_args.sources,
                    "Start cells: center, corner, or c0,c1,... (repeatable)");
  solve->add_option("--buckets", solve_args.buckets, "UFMM bucket count");
  solve->add_option("--trange", solve_args.trange, "UFMM bucket queue key range");
  solve->add_option("--epsilon", solve_args.epsilon, "FIM convergence tolerance");

  GenerateArgs gen_args;
  CLI::App* generate = app.add_subcommand("generate", "Write a velocity grid file");
  generate->add_option("--family", gen_args.family,
                       "empty | barriers | random | checkerboard");
  generate->add_option("--ndims", gen_args.ndims, "Dimension count");
  generate->add_option("--cells", gen_args.cells, "Cells per axis");
  generate->add_option("--barriers", gen_args.barriers, "Barrier count (barriers family)");
  generate->add_option("--scale", gen_args.scale, "Resolution divisor (barriers family)");
  generate->add_option("--fmax", gen_args.fmax, "Maximum velocity");
  generate->add_option("--seed", gen_args.seed, "Random seed");
  generate->add_option("--divisions", gen_args.divisions, "Checkerboard divisions");
  generate->add_option("--output", gen_args.output, "EIKGRID output path")->required();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("--name", bench_args.name, "Experiment id for the CSV");
  bench->add_option("--family", bench_args.family,
                    "empty | barriers | random | checkerboard");
  bench->add_option("--ndims", bench_args.ndims, "Dimension count");
  bench->add_option("--scale", bench_args.scale, "Resolution divisor");
  bench->add_option("--cells", bench_args.cells,
                    "Cells-per-axis points (empty) or fixed extent (random/checkerboard)");
  bench->add_option("--barriers", bench_args.barriers, "Barrier-count points");
  bench->add_option("--fmax", bench_args.fmax, "Maximum-velocity points");
  bench->add_option("--divisions", bench_args.divisions, "Checkerboard divisions");
  bench->add_option("--seed", bench_args.seed, "Random seed");
  bench->add_option("--start", bench_args.start, "default | center | corner");
  bench->add_option("--solver", bench_args.solvers,
                    "Solver names, comma-separated, or all (repeatable)");
  bench->add_option("--runs", bench_args.runs, "Measured runs per point (default 10)");
  bench->add_option("--buckets", bench_args.buckets, "UFMM bucket count override");
  bench->add_option("--trange", bench_args.trange, "UFMM key range override");
  bench->add_option("--epsilon", bench_args.epsilon, "FIM convergence tolerance");
  bench->add_option("--output", bench_args.output, "CSV output path (default stdout)");

  CompareArgs cmp_args;
  CLI::App* compare = app.add_subcommand("compare", "Compare two EIKTIME files");
  compare->add_option("field_a", cmp_args.field_a, "First EIKTIME path")->required();
  compare->add_option("field_b", cmp_args.field_b, "Second EIKTIME path")->required();
  compare->add_option("--tol-l1", cmp_args.tol_l1, "L1 tolerance (default 0)");
  compare->add_option("--tol-linf", cmp_args.tol_linf, "Linf tolerance (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;  // help exits clean
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (generate->parsed()) return cmd_generate(gen_args);
    if (bench->parsed()) return cmd_bench(bench_args);
    if (compare->parsed()) return cmd_compare(cmp_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "eik: " << e.what() << '\n';
    return kExitUsage;
  } catch (const eikonal::io_error& e) {
    std::cerr << "eik: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "eik: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
