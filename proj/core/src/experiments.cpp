#include "eikonal/experiments.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace eikonal {

Grid gen_empty(std::size_t ndims, std::size_t cells_per_axis) {
  if (ndims == 0) throw std::invalid_argument("gen_empty: ndims must be positive");
  if (cells_per_axis == 0)
    throw std::invalid_argument("gen_empty: cells_per_axis must be positive");
  std::vector<std::size_t> dims(ndims, cells_per_axis);
  return Grid(std::move(dims), 1.0 / static_cast<double>(cells_per_axis));
}

Grid gen_barriers(std::size_t ndims, std::size_t barrier_count,
                  std::size_t scale) {
  if (ndims != 2 && ndims != 3)
    throw std::invalid_argument("gen_barriers: only 2D and 3D are defined");
  if (barrier_count > 9)
    throw std::invalid_argument("gen_barriers: barrier_count must be <= 9");
  if (scale == 0) throw std::invalid_argument("gen_barriers: scale must be positive");

  // Short axes span [0,1]; the last axis spans [0,2] with twice the cells.
  const std::size_t base_short = (ndims == 2) ? 1000 : 100;
  std::vector<std::size_t> dims(ndims, base_short / scale);
  dims[ndims - 1] = 2 * (base_short / scale);
  for (std::size_t extent : dims)
    if (extent < 2)
      throw std::invalid_argument("gen_barriers: scale leaves too few cells");
  const double h = 1.0 / static_cast<double>(dims[0]);

  Grid g(dims, h);
  const std::size_t long_extent = dims[ndims - 1];
  const std::size_t width = dims[0];
  const std::size_t gap = std::max<std::size_t>(1, width / 10);

  // One slab per station b/(count+1) along the long axis; the open gap
  // alternates between the high side (odd slabs) and the low side of axis 0.
  for (std::size_t b = 1; b <= barrier_count; ++b) {
    const std::size_t station = b * long_extent / (barrier_count + 1);
    const bool gap_high = (b % 2 == 1);
    std::vector<std::size_t> coords(ndims, 0);
    coords[ndims - 1] = station;
    // Walk every cell of the slab (all transverse coordinates).
    for (;;) {
      const std::size_t x = coords[0];
      const bool in_gap = gap_high ? (x >= width - gap) : (x < gap);
      if (!in_gap) g.velocity(g.flat_index(coords)) = 0.0;
      // Advance the transverse counter (axes 0 .. ndims-2).
      std::size_t d = 0;
      while (d + 1 < ndims) {
        if (++coords[d] < dims[d]) break;
        coords[d] = 0;
        ++d;
      }
      if (d + 1 == ndims) break;
    }
  }
  return g;
}

Grid gen_random(std::size_t ndims, std::size_t cells_per_axis, double fmax,
                std::uint64_t seed) {
  if (fmax < 1.0)
    throw std::invalid_argument("gen_random: fmax must be at least 1");
  Grid g = gen_empty(ndims, cells_per_axis);
  SplitMix64 rng(seed);
  for (double& f : g.velocities()) f = 1.0 + rng.next_unit() * (fmax - 1.0);
  return g;
}

Grid gen_checkerboard(std::size_t ndims, std::size_t cells_per_axis,
                      double fmax, std::size_t divisions) {
  if (fmax < 1.0)
    throw std::invalid_argument("gen_checkerboard: fmax must be at least 1");
  if (divisions == 0)
    throw std::invalid_argument("gen_checkerboard: divisions must be positive");
  Grid g = gen_empty(ndims, cells_per_axis);
  const std::size_t n = g.size();
  for (Index i = 0; i < n; ++i) {
    Index rem = i;
    std::size_t parity = 0;
    for (std::size_t d = 0; d < ndims; ++d) {
      const std::size_t c = rem % cells_per_axis;
      rem /= cells_per_axis;
      parity += c * divisions / cells_per_axis;
    }
    if (parity % 2 == 1) g.velocity(i) = fmax;
  }
  return g;
}

Index center_cell(const Grid& grid) {
  std::vector<std::size_t> coords(grid.ndims());
  for (std::size_t d = 0; d < grid.ndims(); ++d) coords[d] = grid.dim(d) / 2;
  return grid.flat_index(coords);
}

Index near_corner_cell(const Grid& grid) {
  std::vector<std::size_t> coords(grid.ndims());
  for (std::size_t d = 0; d < grid.ndims(); ++d) coords[d] = grid.dim(d) / 20;
  return grid.flat_index(coords);
}

double l1_norm(std::span<const double> field, double h, std::size_t ndims) {
  double sum = 0.0;
  for (double v : field) sum += std::abs(v);
  return std::pow(h, static_cast<double>(ndims)) * sum;
}

double linf_norm(std::span<const double> field) {
  double best = 0.0;
  for (double v : field) best = std::max(best, std::abs(v));
  return best;
}

ErrorNorms error_norms(std::span<const double> field,
                       std::span<const double> reference, double h,
                       std::size_t ndims) {
  if (field.size() != reference.size())
    throw std::invalid_argument("error_norms: field sizes differ");
  double sum = 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const bool inf_a = field[i] == kInf;
    const bool inf_b = reference[i] == kInf;
    if (inf_a != inf_b)
      throw std::invalid_argument(
          "error_norms: +inf cells do not match between fields");
    if (inf_a) continue;  // jointly unreached cells carry no error
    const double d = std::abs(field[i] - reference[i]);
    sum += d;
    worst = std::max(worst, d);
  }
  return ErrorNorms{std::pow(h, static_cast<double>(ndims)) * sum, worst};
}

}  // namespace eikonal
