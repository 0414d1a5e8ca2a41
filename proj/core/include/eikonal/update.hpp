#pragma once

#include <span>

#include "eikonal/grid.hpp"

namespace eikonal {

/// First-order upwind arrival-time update for cell i.
///
/// Gathers the per-axis upwind values min_time_along_axis(i, d), keeps an
/// axis as a parent only when its value is finite and strictly below the
/// cell's current time, sorts the kept values ascending, and solves the
/// discretized equation with 1, 2, ... parents, stopping as soon as the
/// candidate drops below the next unused parent (at which point that parent
/// cannot be upwind of the candidate).
///
/// Returns +inf when no axis qualifies. The returned value is never below
/// the largest parent it consumed, so accepting it preserves causality.
/// Reads the time field only; never writes to the grid. Requires
/// velocity(i) > 0 (obstacle cells must be filtered by the caller).
double solve_eikonal(const Grid& grid, Index i);

/// Solves the isotropic update for cell i restricted to `dim_count` parent
/// values (parents must be sorted ascending; only the first dim_count
/// entries are read).
///
/// For one parent this is the one-sided update T = parent + h/F. For more,
/// it is the larger root of
///
///   sum_d (T - parent_d)^2 = (h / F_i)^2,
///
/// i.e. a*T^2 + b*T + c = 0 with a = dim_count, b = -2*sum(parent_d),
/// c = sum(parent_d^2) - (h/F_i)^2. A negative discriminant means the
/// parents are too spread out to support a common quadrant update; the
/// function returns +inf and the caller falls back to fewer parents.
double solve_n_dims(const Grid& grid, Index i, std::size_t dim_count,
                    std::span<const double> parents);

}  // namespace eikonal
