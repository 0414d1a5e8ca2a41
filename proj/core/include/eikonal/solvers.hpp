#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "eikonal/grid.hpp"
#include "eikonal/narrow_band.hpp"

namespace eikonal {

/// The nine sequential solvers. All of them produce the same first-order
/// upwind solution (UFMM up to its bucket-width quantization error) and
/// differ only in how cells are scheduled.
enum class SolverKind {
  FMM,     // fast marching, binary min-heap
  FMMFib,  // fast marching, Fibonacci heap
  SFMM,    // simplified fast marching, plain priority queue with stale entries
  UFMM,    // untidy fast marching, circular bucket queue
  GMM,     // group marching, threshold-batched band
  FIM,     // fast iterative, active list with convergence test
  FSM,     // fast sweeping, directional passes
  LSM,     // lock sweeping, directional passes over unlocked cells
  DDQM,    // dynamic double queue, two FIFO queues behind a moving threshold
};

inline constexpr std::array<SolverKind, 9> kAllSolvers = {
    SolverKind::FMM, SolverKind::FMMFib, SolverKind::SFMM,
    SolverKind::UFMM, SolverKind::GMM,   SolverKind::FIM,
    SolverKind::FSM, SolverKind::LSM,    SolverKind::DDQM,
};

/// Lower-case identifier used on the command line and in CSV output.
std::string_view solver_name(SolverKind kind);

/// Inverse of solver_name (case-insensitive). std::nullopt for unknown names.
std::optional<SolverKind> parse_solver(std::string_view name);

struct SolverParams {
  UntidyConfig untidy{};     // UFMM bucket queue configuration
  double fim_epsilon = 0.0;  // FIM convergence tolerance
};

/// Instrumentation captured by every solver run.
struct SolverStats {
  std::uint64_t eikonal_solves = 0;   // local update evaluations
  std::uint64_t pops = 0;             // band removals / cell retirements
  std::uint64_t sweeps = 0;           // full directional passes (FSM, LSM)
  std::uint64_t changing_sweeps = 0;  // sweeps that improved at least one cell
  std::uint64_t rounds = 0;           // group/threshold rounds or list passes
  bool monotone_pops = true;          // pop keys never decreased
  double propagation_seconds = 0.0;   // main-loop wall time, setup excluded
};

/// Runs one solver on the grid: resets times/states, seeds the start cells
/// at T = 0, and propagates until the whole reachable region is final.
/// Unreachable cells (walled off by obstacles) keep T = +inf.
///
/// Throws std::invalid_argument when start_cells is empty, contains an
/// out-of-range index, or contains an obstacle cell. The timing in the
/// returned stats covers only the propagation loop; allocation and seeding
/// are excluded.
SolverStats solve(SolverKind kind, Grid& grid, std::span<const Index> start_cells,
                  const SolverParams& params = {});

// Entry points for the individual solvers (same contract as solve()).
SolverStats fmm_propagate(Grid& grid, std::span<const Index> start_cells);
SolverStats fmmfib_propagate(Grid& grid, std::span<const Index> start_cells);
SolverStats sfmm_propagate(Grid& grid, std::span<const Index> start_cells);
SolverStats ufmm_propagate(Grid& grid, std::span<const Index> start_cells,
                           const UntidyConfig& config = {});
SolverStats gmm_propagate(Grid& grid, std::span<const Index> start_cells);
SolverStats fim_propagate(Grid& grid, std::span<const Index> start_cells,
                          double epsilon = 0.0);
SolverStats fsm_propagate(Grid& grid, std::span<const Index> start_cells);
SolverStats lsm_propagate(Grid& grid, std::span<const Index> start_cells);
SolverStats ddqm_propagate(Grid& grid, std::span<const Index> start_cells);

/// Group marching time-step bound: h / max(F), the time the front needs to
/// cross one cell at the grid's top speed. Throws std::invalid_argument when
/// the grid has no positive velocity.
double gmm_time_step(const Grid& grid);

/// Dynamic double queue initial threshold step: 1.5 * h * n / sum(F) with n
/// the cell count. Throws std::invalid_argument when sum(F) is zero.
double ddqm_initial_step(const Grid& grid);

/// Advances the sweep direction vector in place to the next of the 2^N
/// combinations over {-1, +1}. Axis 0 flips fastest (binary increment with
/// carry, treating -1 as 0 and +1 as 1). Starting from all +1 the sequence
/// wraps to all -1, so priming dirs with +1 and calling this before every
/// sweep yields each combination once per cycle of 2^N sweeps.
void next_sweep_dirs(std::span<int> dirs);

}  // namespace eikonal
