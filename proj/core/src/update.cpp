#include "eikonal/update.hpp"

#include <cmath>
#include <vector>

namespace eikonal {

double solve_n_dims(const Grid& grid, Index i, std::size_t dim_count,
                    std::span<const double> parents) {
  const double h_over_f = grid.spacing() / grid.velocity(i);
  if (dim_count == 1) return parents[0] + h_over_f;

  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t d = 0; d < dim_count; ++d) {
    sum += parents[d];
    sum_sq += parents[d] * parents[d];
  }
  const double a = static_cast<double>(dim_count);
  const double b = -2.0 * sum;
  const double c = sum_sq - h_over_f * h_over_f;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return kInf;
  return (-b + std::sqrt(disc)) / (2.0 * a);
}

double solve_eikonal(const Grid& grid, Index i) {
  const std::size_t ndims = grid.ndims();

  // Parent gathering. A stack buffer covers every practical dimension count;
  // grids beyond that fall back to the heap.
  double stack_buf[8];
  std::vector<double> heap_buf;
  double* parents = stack_buf;
  if (ndims > 8) {
    heap_buf.resize(ndims);
    parents = heap_buf.data();
  }

  const double t_i = grid.time(i);
  std::size_t count = 0;
  Index rem = i;
  for (std::size_t d = 0; d < ndims; ++d) {
    const std::size_t extent = grid.dim(d);
    const std::size_t c = rem % extent;
    rem /= extent;
    const std::size_t stride = grid.stride(d);
    double axis_min = kInf;
    if (c > 0) axis_min = grid.time(i - stride);
    if (c + 1 < extent) {
      const double t = grid.time(i + stride);
      if (t < axis_min) axis_min = t;
    }
    // Keep the axis only when it is usable (finite) and strictly upwind of
    // the cell's current value.
    if (axis_min != kInf && axis_min < t_i) parents[count++] = axis_min;
  }
  if (count == 0) return kInf;

  // Insertion sort: deterministic and fastest for these tiny arrays.
  for (std::size_t k = 1; k < count; ++k) {
    const double v = parents[k];
    std::size_t m = k;
    for (; m > 0 && parents[m - 1] > v; --m) parents[m] = parents[m - 1];
    parents[m] = v;
  }

  // Solve with a growing parent set; once the candidate is below the next
  // unused parent, adding that parent could only violate causality.
  double candidate = kInf;
  for (std::size_t used = 1; used <= count; ++used) {
    candidate = solve_n_dims(grid, i, used, {parents, count});
    if (used == count || candidate < parents[used]) break;
  }
  return candidate;
}

}  // namespace eikonal
