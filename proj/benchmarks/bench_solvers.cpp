// End-to-end solver benchmarks over the scenario families. solve() resets
// the grid's times and states itself, so each iteration is a fresh run on
// the same velocity field.

#include <benchmark/benchmark.h>

#include "eikonal/experiments.hpp"
#include "eikonal/solvers.hpp"

using namespace eikonal;

namespace {

enum class Start { Center, Corner };

void run_solver(benchmark::State& state, SolverKind kind, Grid grid,
                Start start) {
  const Index src =
      start == Start::Corner ? near_corner_cell(grid) : center_cell(grid);
  const std::span<const Index> sources(&src, 1);
  for (auto _ : state) {
    solve(kind, grid, sources);
    benchmark::DoNotOptimize(grid.times().data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(grid.size()));
}

}  // namespace

#define SOLVER_BENCH(tag, kind, grid_expr, start)                      \
  static void BM_##tag(benchmark::State& state) {                      \
    run_solver(state, kind, grid_expr, start);                         \
  }                                                                    \
  BENCHMARK(BM_##tag)->Unit(benchmark::kMillisecond)

// Full roster on the empty 200x200 map: pure scheduling cost, no velocity
// structure.
SOLVER_BENCH(fmm_empty_200, SolverKind::FMM, gen_empty(2, 200), Start::Center);
SOLVER_BENCH(fmmfib_empty_200, SolverKind::FMMFib, gen_empty(2, 200), Start::Center);
SOLVER_BENCH(sfmm_empty_200, SolverKind::SFMM, gen_empty(2, 200), Start::Center);
SOLVER_BENCH(ufmm_empty_200, SolverKind::UFMM, gen_empty(2, 200), Start::Center);
SOLVER_BENCH(gmm_empty_200, SolverKind::GMM, gen_empty(2, 200), Start::Center);
SOLVER_BENCH(fim_empty_200, SolverKind::FIM, gen_empty(2, 200), Start::Center);
SOLVER_BENCH(fsm_empty_200, SolverKind::FSM, gen_empty(2, 200), Start::Center);
SOLVER_BENCH(lsm_empty_200, SolverKind::LSM, gen_empty(2, 200), Start::Center);
SOLVER_BENCH(ddqm_empty_200, SolverKind::DDQM, gen_empty(2, 200), Start::Center);

// Obstacles: the zig-zag forces sweeping methods through many passes.
SOLVER_BENCH(fmm_barriers9, SolverKind::FMM, gen_barriers(2, 9, 10), Start::Corner);
SOLVER_BENCH(sfmm_barriers9, SolverKind::SFMM, gen_barriers(2, 9, 10), Start::Corner);
SOLVER_BENCH(fsm_barriers9, SolverKind::FSM, gen_barriers(2, 9, 10), Start::Corner);
SOLVER_BENCH(lsm_barriers9, SolverKind::LSM, gen_barriers(2, 9, 10), Start::Corner);
SOLVER_BENCH(ddqm_barriers9, SolverKind::DDQM, gen_barriers(2, 9, 10), Start::Corner);

// Heterogeneous velocities: random noise and checkerboard contrast.
SOLVER_BENCH(fmm_random_100, SolverKind::FMM, gen_random(2, 100, 100.0, 42), Start::Center);
SOLVER_BENCH(sfmm_random_100, SolverKind::SFMM, gen_random(2, 100, 100.0, 42), Start::Center);
SOLVER_BENCH(ufmm_random_100, SolverKind::UFMM, gen_random(2, 100, 100.0, 42), Start::Center);
SOLVER_BENCH(fim_random_100, SolverKind::FIM, gen_random(2, 100, 100.0, 42), Start::Center);
SOLVER_BENCH(ddqm_random_100, SolverKind::DDQM, gen_random(2, 100, 100.0, 42), Start::Center);
SOLVER_BENCH(fmm_checker_200, SolverKind::FMM, gen_checkerboard(2, 200, 100.0), Start::Center);
SOLVER_BENCH(sfmm_checker_200, SolverKind::SFMM, gen_checkerboard(2, 200, 100.0), Start::Center);
SOLVER_BENCH(fsm_checker_200, SolverKind::FSM, gen_checkerboard(2, 200, 100.0), Start::Center);

// Higher dimensions at matched cell counts.
SOLVER_BENCH(fmm_empty_22_3d, SolverKind::FMM, gen_empty(3, 22), Start::Center);
SOLVER_BENCH(sfmm_empty_22_3d, SolverKind::SFMM, gen_empty(3, 22), Start::Center);
SOLVER_BENCH(fsm_empty_22_3d, SolverKind::FSM, gen_empty(3, 22), Start::Center);
SOLVER_BENCH(fmm_empty_10_4d, SolverKind::FMM, gen_empty(4, 10), Start::Center);
SOLVER_BENCH(sfmm_empty_10_4d, SolverKind::SFMM, gen_empty(4, 10), Start::Center);
SOLVER_BENCH(fsm_empty_10_4d, SolverKind::FSM, gen_empty(4, 10), Start::Center);

BENCHMARK_MAIN();
