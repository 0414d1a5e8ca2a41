#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "eikonal/bench.hpp"

using namespace eikonal;

namespace {

ExperimentSpec tiny_spec() {
  ExperimentSpec spec;
  spec.name = "tiny";
  spec.family = Family::Empty;
  spec.ndims = 2;
  spec.cells = {20};
  spec.solvers = {SolverKind::FMM, SolverKind::FSM};
  spec.runs = 2;
  return spec;
}

}  // namespace

TEST_CASE("run_experiment yields one record per solver per point") {
  ExperimentSpec spec = tiny_spec();
  spec.cells = {16, 24};
  const auto records = run_experiment(spec);
  REQUIRE(records.size() == 4);  // 2 solvers x 2 points
  CHECK(records[0].solver == SolverKind::FMM);
  CHECK(records[0].param == 16.0);
  CHECK(records[1].solver == SolverKind::FSM);
  CHECK(records[2].param == 24.0);
  for (const auto& r : records) {
    CHECK(r.ok);
    CHECK(r.experiment == "tiny");
    CHECK(r.ndims == 2);
    CHECK(r.run_seconds.size() == 2);
    CHECK(r.mean_s > 0.0);
  }
}

TEST_CASE("FMM reference rows have ratio exactly 1 and zero error") {
  const auto records = run_experiment(tiny_spec());
  REQUIRE(records.size() == 2);
  CHECK(records[0].ratio_vs_fmm == 1.0);
  CHECK(records[0].l1_err == 0.0);
  CHECK(records[0].linf_err == 0.0);
  CHECK(records[1].ratio_vs_fmm > 0.0);
  CHECK(records[1].linf_err <= 1e-9);  // sweeping converges exactly here
}

TEST_CASE("a single run has zero sample stddev") {
  ExperimentSpec spec = tiny_spec();
  spec.runs = 1;
  const auto records = run_experiment(spec);
  for (const auto& r : records) {
    CHECK(r.run_seconds.size() == 1);
    CHECK(r.stddev_s == 0.0);
  }
}

TEST_CASE("solver fields are deterministic across repeat experiments") {
  ExperimentSpec spec = tiny_spec();
  spec.family = Family::Random;
  spec.cells = {40};
  spec.fmax_values = {50.0};
  spec.solvers = {SolverKind::FMM, SolverKind::SFMM, SolverKind::UFMM};
  const auto a = run_experiment(spec);
  const auto b = run_experiment(spec);
  REQUIRE(a.size() == 3);
  REQUIRE(b.size() == 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].l1_err == b[i].l1_err);
    CHECK(a[i].linf_err == b[i].linf_err);
  }
  // SFMM is exact; UFMM is the lone approximate solver.
  CHECK(a[1].linf_err <= 1e-12);
  CHECK(a[2].linf_err > 0.0);
}

TEST_CASE("a solver failure becomes an error row with NaN numerics") {
  ExperimentSpec spec = tiny_spec();
  spec.solvers = {SolverKind::FMM, SolverKind::UFMM};
  spec.params.untidy.buckets = 2;
  spec.params.untidy.t_range = 1e-9;  // guaranteed span overflow
  spec.untidy_overridden = true;
  const auto records = run_experiment(spec);
  REQUIRE(records.size() == 2);
  CHECK(records[0].ok);
  const auto& bad = records[1];
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.error.empty());
  CHECK(std::isnan(bad.mean_s));
  CHECK(std::isnan(bad.ratio_vs_fmm));
  CHECK(std::isnan(bad.l1_err));
  CHECK(std::isnan(bad.linf_err));
}

TEST_CASE("write_csv emits the pinned header and one line per record") {
  const auto records = run_experiment(tiny_spec());
  std::ostringstream out;
  write_csv(out, records);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line ==
        "experiment,family,ndims,param,solver,run_mean_s,run_stddev_s,"
        "ratio_vs_fmm,l1_err,linf_err");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.rfind("tiny,empty,2,20,", 0) == 0);
  }
  CHECK(rows == records.size());
}

TEST_CASE("error rows serialize NaN fields as nan") {
  BenchRecord r;
  r.experiment = "x";
  r.family = Family::Random;
  r.ndims = 3;
  r.param = 60.0;
  r.solver = SolverKind::UFMM;
  r.mean_s = r.stddev_s = r.ratio_vs_fmm = r.l1_err = r.linf_err = NAN;
  r.ok = false;
  r.error = "bucket span exceeded";
  std::ostringstream out;
  write_csv(out, std::vector<BenchRecord>{r});
  std::istringstream in(out.str());
  std::string header, row;
  REQUIRE(std::getline(in, header));
  REQUIRE(std::getline(in, row));
  CHECK(row == "x,random,3,60,ufmm,nan,nan,nan,nan,nan");
}

TEST_CASE("spec validation") {
  ExperimentSpec spec = tiny_spec();
  spec.solvers.clear();
  CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);

  spec = tiny_spec();
  spec.runs = 0;
  CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);

  spec = tiny_spec();
  spec.family = Family::Barriers;
  spec.ndims = 4;
  spec.barriers = {3};
  spec.scale = 10;
  CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);
}

TEST_CASE("default ladders match the built-in sweep") {
  CHECK(default_cells_ladder(2) ==
        std::vector<std::size_t>{50, 100, 200, 400, 800, 1000, 1500, 2000,
                                 2500, 3000, 4000});
  CHECK(default_cells_ladder(3) ==
        std::vector<std::size_t>{14, 22, 34, 54, 86, 100, 131, 159, 184, 208,
                                 252});
  CHECK(default_cells_ladder(4) ==
        std::vector<std::size_t>{7, 10, 14, 20, 28, 32, 39, 45, 50, 55, 63});
  CHECK_THROWS_AS(default_cells_ladder(5), std::invalid_argument);

  CHECK(default_velocity_extent(2) == 2000);
  CHECK(default_velocity_extent(3) == 159);
  CHECK(default_velocity_extent(4) == 45);

  CHECK(default_fmax_ladder() ==
        std::vector<double>{10, 20, 30, 40, 50, 60, 70, 80, 90, 100});
}

TEST_CASE("empty-family scale skips rungs that collapse") {
  ExperimentSpec spec = tiny_spec();
  spec.cells.clear();  // full 2D ladder
  spec.scale = 1000;   // 50 -> 0 cells, skipped; 1000 -> 1, skipped; ...
  spec.solvers = {SolverKind::FMM};
  spec.runs = 1;
  const auto records = run_experiment(spec);
  // Only rungs with >= 2 scaled cells survive: 2000, 2500, 3000, 4000.
  REQUIRE(records.size() == 4);
  CHECK(records.front().param == 2.0);
  CHECK(records.back().param == 4.0);
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::Empty, Family::Barriers, Family::Random,
                   Family::Checkerboard}) {
    auto parsed = parse_family(family_name(f));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == f);
  }
  CHECK_FALSE(parse_family("no-such-family").has_value());
}
