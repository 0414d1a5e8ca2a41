#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace eikonal {

/// Flat cell index into a grid's row-major storage.
using Index = std::size_t;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Propagation label attached to every cell. A cell carries exactly one
/// label at a time. Front-tracking solvers use the literal meaning
/// (Unknown = untouched, Narrow = in the band, Frozen = final); sweep-based
/// solvers reuse Narrow/Frozen as unlocked/locked.
enum class CellState : std::uint8_t { Unknown, Narrow, Frozen };

/// N-dimensional Cartesian grid with cubic cells: one spacing `h` shared by
/// every axis. Storage is row-major with axis 0 fastest-varying, so the flat
/// index of coordinates (c0, c1, ..., c_{N-1}) is sum(c_d * stride_d) with
/// stride_0 = 1 and stride_d = stride_{d-1} * dims[d-1].
///
/// Each cell carries a propagation speed F (velocity), an arrival time T,
/// and a CellState. Cells with F <= 0 are obstacles: reset_for_solve() marks
/// them Frozen with T = +inf and solvers never evaluate them.
class Grid {
public:
  /// Velocity at or below this value marks a cell as an obstacle.
  static constexpr double kObstacleVelocity = 0.0;

  /// Builds a grid with unit velocity everywhere.
  /// Throws std::invalid_argument on empty dims, a zero extent, h <= 0,
  /// or an extent product that overflows size_t.
  Grid(std::vector<std::size_t> dims, double h);

  /// Builds a grid taking ownership of a velocity field laid out row-major.
  /// Additionally throws if velocity.size() != cell count or any velocity
  /// value is negative or NaN.
  Grid(std::vector<std::size_t> dims, double h, std::vector<double> velocity);

  std::size_t ndims() const { return dims_.size(); }
  std::size_t size() const { return velocity_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t axis) const { return dims_[axis]; }
  std::size_t stride(std::size_t axis) const { return strides_[axis]; }
  double spacing() const { return h_; }

  double velocity(Index i) const { return velocity_[i]; }
  double& velocity(Index i) { return velocity_[i]; }
  std::span<const double> velocities() const { return velocity_; }
  std::span<double> velocities() { return velocity_; }

  double time(Index i) const { return time_[i]; }
  double& time(Index i) { return time_[i]; }
  std::span<const double> times() const { return time_; }
  std::span<double> times() { return time_; }

  CellState state(Index i) const { return state_[i]; }
  CellState& state(Index i) { return state_[i]; }
  std::span<CellState> states() { return state_; }

  bool is_obstacle(Index i) const { return velocity_[i] <= kObstacleVelocity; }

  /// Maps coordinates to the flat index. Throws std::out_of_range if the
  /// coordinate count differs from ndims() or any coordinate exceeds its
  /// extent.
  Index flat_index(std::span<const std::size_t> coords) const;
  Index flat_index(std::initializer_list<std::size_t> coords) const {
    return flat_index(std::span<const std::size_t>(coords.begin(), coords.size()));
  }

  /// Inverse of flat_index. Throws std::out_of_range if i >= size().
  std::vector<std::size_t> coords_of(Index i) const;

  /// Axis-aligned face neighbors of cell i in deterministic order:
  /// axis 0 minus, axis 0 plus, axis 1 minus, axis 1 plus, ...
  /// Out-of-bounds sides are omitted (no wrap-around).
  std::vector<Index> neighbors(Index i) const;

  /// Calls fn(Index) for each face neighbor of i, in the same deterministic
  /// order as neighbors(). Allocation-free; intended for solver hot loops.
  template <typename Fn>
  void for_each_neighbor(Index i, Fn&& fn) const {
    Index rem = i;
    for (std::size_t d = 0; d < dims_.size(); ++d) {
      const std::size_t extent = dims_[d];
      const std::size_t c = rem % extent;
      rem /= extent;
      const std::size_t stride = strides_[d];
      if (c > 0) fn(i - stride);
      if (c + 1 < extent) fn(i + stride);
    }
  }

  /// Minimum arrival time among the (at most two) face neighbors of cell i
  /// along one axis; +inf when both sides are out of bounds. This is the
  /// per-axis upwind value consumed by the finite-difference update.
  double min_time_along_axis(Index i, std::size_t axis) const {
    const std::size_t extent = dims_[axis];
    const std::size_t c = (i / strides_[axis]) % extent;
    double best = kInf;
    if (c > 0) best = time_[i - strides_[axis]];
    if (c + 1 < extent) {
      const double t = time_[i + strides_[axis]];
      if (t < best) best = t;
    }
    return best;
  }

  /// Prepares the grid for a fresh solve: T = +inf everywhere, all states
  /// Unknown, then obstacle cells (F <= 0) set Frozen so no solver touches
  /// them. Velocities are untouched.
  void reset_for_solve();

private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  double h_ = 0.0;
  std::vector<double> velocity_;
  std::vector<double> time_;
  std::vector<CellState> state_;
};

}  // namespace eikonal
