#pragma once

#include <cstdint>
#include <span>

#include "eikonal/grid.hpp"

namespace eikonal {

/// splitmix64: the de-facto standard 64-bit seeding PRNG (public domain,
/// Steele/Lea/Flood). state advances by the golden-ratio increment and the
/// output is a finalizer hash of the state. Chosen because it is trivially
/// portable: any implementation of these two lines reproduces the same
/// stream bit-for-bit, so generated grids are identical across platforms
/// and languages.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) using the top 53 bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

/// Uniform-velocity unit hypercube [0,1]^ndims with cells_per_axis cells on
/// every axis (h = 1/cells_per_axis), F = 1 everywhere.
Grid gen_empty(std::size_t ndims, std::size_t cells_per_axis);

/// Constant-velocity domain [0,1]x[0,2] (2D, 1000x2000 cells) or
/// [0,1]x[0,1]x[0,2] (3D, 100x100x200 cells) crossed by `barrier_count`
/// zero-velocity slabs, one cell thick, perpendicular to the long axis and
/// equally spaced along it. Each slab leaves an open gap of 10% of the
/// short axis, alternating between the two sides so the path zig-zags.
/// `scale` divides every extent for reduced-resolution runs.
/// Throws std::invalid_argument unless ndims is 2 or 3, barrier_count <= 9,
/// and the scaled extents stay positive.
Grid gen_barriers(std::size_t ndims, std::size_t barrier_count,
                  std::size_t scale = 1);

/// Unit hypercube with velocities drawn independently and uniformly from
/// [1, fmax) by SplitMix64(seed), in flat cell order. fmax = 1 degenerates
/// to the empty map. Throws std::invalid_argument when fmax < 1.
Grid gen_random(std::size_t ndims, std::size_t cells_per_axis, double fmax,
                std::uint64_t seed);

/// Unit hypercube split into `divisions` blocks per axis. A cell's block
/// coordinate on axis d is floor(coord_d * divisions / cells_per_axis); the
/// block parity (sum of block coordinates) selects F: even -> 1, odd ->
/// fmax. Throws std::invalid_argument when fmax < 1 or divisions == 0.
Grid gen_checkerboard(std::size_t ndims, std::size_t cells_per_axis,
                      double fmax, std::size_t divisions = 10);

/// Cell at the middle of every axis (dims[d] / 2).
Index center_cell(const Grid& grid);

/// Cell at 5% of every axis: strictly inside the domain, near the origin
/// corner. Matches the barrier experiments' start placement.
Index near_corner_cell(const Grid& grid);

/// Volume-weighted L1 magnitude of a field: h^ndims * sum(|field_i|).
double l1_norm(std::span<const double> field, double h, std::size_t ndims);

/// max(|field_i|).
double linf_norm(std::span<const double> field);

struct ErrorNorms {
  double l1 = 0.0;
  double linf = 0.0;
};

/// L1 and L-infinity norms of (field - reference). Cells where both values
/// are +inf (unreached/obstacle) are excluded; a cell that is +inf on one
/// side only throws std::invalid_argument, as does a size mismatch.
ErrorNorms error_norms(std::span<const double> field,
                       std::span<const double> reference, double h,
                       std::size_t ndims);

}  // namespace eikonal
