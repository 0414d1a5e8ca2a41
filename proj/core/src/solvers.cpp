#include "eikonal/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "eikonal/update.hpp"

namespace eikonal {

namespace {

void validate_start_cells(const Grid& g, std::span<const Index> start_cells) {
  if (start_cells.empty())
    throw std::invalid_argument("solve: start cell list is empty");
  for (Index s : start_cells) {
    if (s >= g.size())
      throw std::invalid_argument("solve: start cell index out of range");
    if (g.is_obstacle(s))
      throw std::invalid_argument("solve: start cell has zero velocity");
  }
}

struct Stopwatch {
  std::chrono::steady_clock::time_point begin = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - begin)
        .count();
  }
};

/// Doubly-linked list over cell ids (each cell present at most once), used
/// as the band container by the group-marching and fast-iterative solvers.
struct CellList {
  static constexpr std::int64_t kNil = -1;

  explicit CellList(std::size_t n) : next(n, kNil), prev(n, kNil) {}

  void append(Index c) {
    const std::int64_t v = static_cast<std::int64_t>(c);
    next[c] = kNil;
    prev[c] = tail;
    if (tail != kNil) next[tail] = v; else head = v;
    tail = v;
    ++count;
  }

  void insert_before(Index c, Index at) {
    const std::int64_t v = static_cast<std::int64_t>(c);
    const std::int64_t a = static_cast<std::int64_t>(at);
    prev[c] = prev[at];
    next[c] = a;
    if (prev[at] != kNil) next[prev[at]] = v; else head = v;
    prev[at] = v;
    ++count;
  }

  void erase(Index c) {
    const std::int64_t p = prev[c];
    const std::int64_t n = next[c];
    if (p != kNil) next[p] = n; else head = n;
    if (n != kNil) prev[n] = p; else tail = p;
    --count;
  }

  std::vector<std::int64_t> next, prev;
  std::int64_t head = kNil;
  std::int64_t tail = kNil;
  std::size_t count = 0;
};

/// Shared fast-marching loop: pop the smallest band cell, freeze it, update
/// non-frozen neighbors. Band must provide push/decrease/pop/empty.
template <class Band>
SolverStats march(Grid& g, std::span<const Index> start_cells, Band band) {
  validate_start_cells(g, start_cells);
  g.reset_for_solve();
  SolverStats st;
  for (Index s : start_cells) {
    if (g.state(s) == CellState::Narrow) continue;  // duplicate start cell
    g.time(s) = 0.0;
    g.state(s) = CellState::Narrow;
    band.push(s, 0.0);
  }

  Stopwatch clock;
  double last_key = -kInf;
  while (!band.empty()) {
    const KeyedEntry e = band.pop();
    ++st.pops;
    if (e.key < last_key) st.monotone_pops = false;
    last_key = e.key;
    const Index i = e.cell;
    g.state(i) = CellState::Frozen;
    g.for_each_neighbor(i, [&](Index j) {
      const CellState sj = g.state(j);
      if (sj == CellState::Frozen) return;  // final cells and obstacles
      const double t = solve_eikonal(g, j);
      ++st.eikonal_solves;
      if (t < g.time(j)) {
        g.time(j) = t;
        if (sj == CellState::Narrow) band.decrease(j, t);
      }
      if (sj == CellState::Unknown) {
        g.state(j) = CellState::Narrow;
        band.push(j, g.time(j));
      }
    });
  }
  st.propagation_seconds = clock.seconds();
  return st;
}

}  // namespace

std::string_view solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::FMM: return "fmm";
    case SolverKind::FMMFib: return "fmmfib";
    case SolverKind::SFMM: return "sfmm";
    case SolverKind::UFMM: return "ufmm";
    case SolverKind::GMM: return "gmm";
    case SolverKind::FIM: return "fim";
    case SolverKind::FSM: return "fsm";
    case SolverKind::LSM: return "lsm";
    case SolverKind::DDQM: return "ddqm";
  }
  return "unknown";
}

std::optional<SolverKind> parse_solver(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (SolverKind kind : kAllSolvers)
    if (lower == solver_name(kind)) return kind;
  return std::nullopt;
}

SolverStats fmm_propagate(Grid& g, std::span<const Index> start_cells) {
  return march(g, start_cells, BinaryHeap(g.size()));
}

SolverStats fmmfib_propagate(Grid& g, std::span<const Index> start_cells) {
  return march(g, start_cells, FibonacciHeap(g.size()));
}

SolverStats ufmm_propagate(Grid& g, std::span<const Index> start_cells,
                           const UntidyConfig& config) {
  return march(g, start_cells, UntidyQueue(g.size(), config));
}

SolverStats sfmm_propagate(Grid& g, std::span<const Index> start_cells) {
  validate_start_cells(g, start_cells);
  g.reset_for_solve();
  SolverStats st;
  StaleQueue q;
  for (Index s : start_cells) {
    if (g.state(s) == CellState::Narrow) continue;
    g.time(s) = 0.0;
    g.state(s) = CellState::Narrow;
    q.push(s, 0.0);
  }

  Stopwatch clock;
  double last_key = -kInf;
  while (!q.empty()) {
    const KeyedEntry e = q.pop();
    const Index i = e.cell;
    if (g.state(i) == CellState::Frozen) continue;  // stale duplicate
    ++st.pops;
    if (e.key < last_key) st.monotone_pops = false;
    last_key = e.key;
    g.state(i) = CellState::Frozen;
    g.for_each_neighbor(i, [&](Index j) {
      const CellState sj = g.state(j);
      if (sj == CellState::Frozen) return;
      const double t = solve_eikonal(g, j);
      ++st.eikonal_solves;
      if (t < g.time(j)) {
        g.time(j) = t;
        if (sj == CellState::Unknown) g.state(j) = CellState::Narrow;
        q.push(j, t);  // may duplicate an earlier, now stale, entry
      }
    });
  }
  st.propagation_seconds = clock.seconds();
  return st;
}

double gmm_time_step(const Grid& g) {
  double max_f = 0.0;
  for (double f : g.velocities()) max_f = std::max(max_f, f);
  if (max_f <= 0.0)
    throw std::invalid_argument("gmm_time_step: grid has no positive velocity");
  // One fastest-cell crossing. Deeper groups can contain two-link upwind
  // chains, which the two traversal passes cannot settle in freeze order.
  return g.spacing() / max_f;
}

SolverStats gmm_propagate(Grid& g, std::span<const Index> start_cells) {
  validate_start_cells(g, start_cells);
  g.reset_for_solve();
  SolverStats st;
  const double dtau = gmm_time_step(g);
  CellList band(g.size());

  for (Index s : start_cells) {
    g.time(s) = 0.0;
    g.state(s) = CellState::Frozen;
  }
  for (Index s : start_cells) {
    g.for_each_neighbor(s, [&](Index j) {
      if (g.state(j) == CellState::Frozen) return;  // obstacle or another start
      const double t = solve_eikonal(g, j);
      ++st.eikonal_solves;
      if (t < g.time(j)) g.time(j) = t;
      if (g.state(j) == CellState::Unknown) {
        g.state(j) = CellState::Narrow;
        band.append(j);
      }
    });
  }

  Stopwatch clock;
  while (band.count > 0) {
    // The group reaches one time step above the band's current minimum.
    double band_min = kInf;
    for (std::int64_t v = band.head; v != CellList::kNil; v = band.next[v])
      band_min = std::min(band_min, g.time(static_cast<Index>(v)));
    const double t_m = band_min + dtau;
    ++st.rounds;

    // Group members are evaluated twice before freezing: a relaxation pass
    // tail -> head re-solves each member's own value so intra-group
    // dependencies settle without any ordering structure...
    for (std::int64_t v = band.tail; v != CellList::kNil; v = band.prev[v]) {
      const Index i = static_cast<Index>(v);
      if (g.time(i) > t_m) continue;
      const double t = solve_eikonal(g, i);
      ++st.eikonal_solves;
      if (t < g.time(i)) g.time(i) = t;
    }

    // ... then a head -> tail pass re-solves once more, freezes the member,
    // and updates its non-frozen neighbors, admitting unknown ones to the
    // band. Cells appended during the pass wait for the next round.
    const std::int64_t stop = band.tail;
    std::int64_t v = band.head;
    bool done = (v == CellList::kNil);
    while (!done) {
      const Index i = static_cast<Index>(v);
      const std::int64_t nxt = band.next[v];
      done = (v == stop);
      if (g.time(i) <= t_m) {
        const double t = solve_eikonal(g, i);
        ++st.eikonal_solves;
        if (t < g.time(i)) g.time(i) = t;
        band.erase(i);
        g.state(i) = CellState::Frozen;
        ++st.pops;
        g.for_each_neighbor(i, [&](Index j) {
          if (g.is_obstacle(j)) return;
          const double tj = solve_eikonal(g, j);
          ++st.eikonal_solves;
          if (tj < g.time(j)) {
            g.time(j) = tj;
            // A frozen neighbor can very rarely still improve: a chain of
            // near-zero update increments fits inside one group window, and
            // the member at its end freezes before the chain's value reaches
            // it. Re-opening the cell repairs the miss and keeps the final
            // field the exact fixed point every other solver converges to.
            if (g.state(j) == CellState::Frozen) {
              g.state(j) = CellState::Narrow;
              band.append(j);
            }
          }
          if (g.state(j) == CellState::Unknown) {
            g.state(j) = CellState::Narrow;
            band.append(j);
          }
        });
      }
      v = nxt;
    }
  }
  st.propagation_seconds = clock.seconds();
  return st;
}

SolverStats fim_propagate(Grid& g, std::span<const Index> start_cells,
                          double epsilon) {
  if (epsilon < 0.0)
    throw std::invalid_argument("fim_propagate: epsilon must be non-negative");
  validate_start_cells(g, start_cells);
  g.reset_for_solve();
  // Everything starts locked; the active list tracks unlocked cells.
  for (CellState& s : g.states()) s = CellState::Frozen;
  // An exact-zero tolerance can never observe |new - old| < 0, so raise it
  // to one representable hair above zero.
  const double eps_eff = std::max(epsilon, 1e-47);
  SolverStats st;
  CellList active(g.size());

  for (Index s : start_cells) g.time(s) = 0.0;
  for (Index s : start_cells) {
    g.for_each_neighbor(s, [&](Index j) {
      if (g.is_obstacle(j) || g.time(j) == 0.0) return;  // obstacle or start
      if (g.state(j) == CellState::Narrow) return;       // already seeded
      g.state(j) = CellState::Narrow;
      active.append(j);
    });
  }

  Stopwatch clock;
  while (active.count > 0) {
    ++st.rounds;
    std::int64_t v = active.head;
    while (v != CellList::kNil) {
      const Index i = static_cast<Index>(v);
      const std::int64_t nxt = active.next[v];
      const double old = g.time(i);
      const double t = solve_eikonal(g, i);
      ++st.eikonal_solves;
      g.time(i) = t;
      if (t == old || std::abs(t - old) < eps_eff) {
        // Converged. Wake any locked neighbor that can still improve; it is
        // inserted before the cursor so the next pass visits it.
        g.for_each_neighbor(i, [&](Index j) {
          if (g.state(j) != CellState::Frozen || g.is_obstacle(j)) return;
          const double tj = solve_eikonal(g, j);
          ++st.eikonal_solves;
          if (tj < g.time(j)) {
            g.time(j) = tj;
            g.state(j) = CellState::Narrow;
            active.insert_before(j, i);
          }
        });
        active.erase(i);
        g.state(i) = CellState::Frozen;
        ++st.pops;
      }
      v = nxt;
    }
  }
  st.propagation_seconds = clock.seconds();
  return st;
}

void next_sweep_dirs(std::span<int> dirs) {
  for (int& d : dirs) {
    if (d == -1) {
      d = 1;
      return;
    }
    d = -1;  // carry into the next axis
  }
}

namespace {

/// Runs `visit` over every cell in the directional order given by dirs
/// (axis 0 innermost). Returns true when any visit reported a change.
template <class Visit>
bool directional_pass(const Grid& g, std::span<const int> dirs,
                      std::size_t axis, Index base, Visit&& visit) {
  bool changed = false;
  const std::size_t extent = g.dim(axis);
  const std::size_t stride = g.stride(axis);
  if (axis == 0) {
    if (dirs[0] > 0) {
      for (std::size_t c = 0; c < extent; ++c) changed |= visit(base + c);
    } else {
      for (std::size_t c = extent; c-- > 0;) changed |= visit(base + c);
    }
  } else {
    if (dirs[axis] > 0) {
      for (std::size_t c = 0; c < extent; ++c)
        changed |= directional_pass(g, dirs, axis - 1, base + c * stride, visit);
    } else {
      for (std::size_t c = extent; c-- > 0;)
        changed |= directional_pass(g, dirs, axis - 1, base + c * stride, visit);
    }
  }
  return changed;
}

/// Cycles sweep directions until a full cycle of 2^N consecutive sweeps
/// leaves every value unchanged.
template <class Visit>
void sweep_until_settled(Grid& g, SolverStats& st, Visit&& visit) {
  std::vector<int> dirs(g.ndims(), 1);
  const std::uint64_t cycle = std::uint64_t{1} << g.ndims();
  std::uint64_t quiet = 0;
  while (quiet < cycle) {
    next_sweep_dirs(dirs);
    const bool changed =
        directional_pass(g, dirs, g.ndims() - 1, 0, visit);
    ++st.sweeps;
    if (changed) {
      ++st.changing_sweeps;
      quiet = 0;
    } else {
      ++quiet;
    }
  }
}

}  // namespace

SolverStats fsm_propagate(Grid& g, std::span<const Index> start_cells) {
  validate_start_cells(g, start_cells);
  g.reset_for_solve();
  SolverStats st;
  for (Index s : start_cells) {
    g.time(s) = 0.0;
    g.state(s) = CellState::Frozen;
  }

  Stopwatch clock;
  sweep_until_settled(g, st, [&](Index i) -> bool {
    if (g.is_obstacle(i)) return false;
    const double t = solve_eikonal(g, i);
    ++st.eikonal_solves;
    if (t < g.time(i)) {
      g.time(i) = t;
      return true;
    }
    return false;
  });
  st.propagation_seconds = clock.seconds();
  return st;
}

SolverStats lsm_propagate(Grid& g, std::span<const Index> start_cells) {
  validate_start_cells(g, start_cells);
  g.reset_for_solve();
  // Everything starts locked (Frozen); only unlocked (Narrow) cells are
  // evaluated, and an improved cell unlocks downwind neighbors.
  for (CellState& s : g.states()) s = CellState::Frozen;
  SolverStats st;
  for (Index s : start_cells) g.time(s) = 0.0;
  for (Index s : start_cells) {
    g.for_each_neighbor(s, [&](Index j) {
      if (g.is_obstacle(j) || g.time(j) == 0.0) return;
      g.state(j) = CellState::Narrow;
    });
  }

  Stopwatch clock;
  sweep_until_settled(g, st, [&](Index i) -> bool {
    if (g.state(i) != CellState::Narrow) return false;  // locked or obstacle
    const double t = solve_eikonal(g, i);
    ++st.eikonal_solves;
    bool improved = false;
    if (t < g.time(i)) {
      g.time(i) = t;
      improved = true;
      g.for_each_neighbor(i, [&](Index j) {
        if (g.state(j) == CellState::Frozen && !g.is_obstacle(j) &&
            t < g.time(j))
          g.state(j) = CellState::Narrow;
      });
    }
    g.state(i) = CellState::Frozen;  // relock until a neighbor improves
    return improved;
  });
  st.propagation_seconds = clock.seconds();
  return st;
}

double ddqm_initial_step(const Grid& g) {
  double sum_f = 0.0;
  for (double f : g.velocities()) sum_f += f;
  if (sum_f <= 0.0)
    throw std::invalid_argument("ddqm_initial_step: grid has no positive velocity");
  return 1.5 * g.spacing() * static_cast<double>(g.size()) / sum_f;
}

SolverStats ddqm_propagate(Grid& g, std::span<const Index> start_cells) {
  validate_start_cells(g, start_cells);
  g.reset_for_solve();
  for (CellState& s : g.states()) s = CellState::Frozen;
  SolverStats st;
  DoubleQueue queue(ddqm_initial_step(g));

  for (Index s : start_cells) g.time(s) = 0.0;
  for (Index s : start_cells) {
    g.for_each_neighbor(s, [&](Index j) {
      if (g.is_obstacle(j) || g.time(j) == 0.0) return;
      if (g.state(j) == CellState::Narrow) return;
      g.state(j) = CellState::Narrow;
      queue.seed(j);
    });
  }

  Stopwatch clock;
  while (!queue.drained()) {
    Index i;
    while (queue.pop_active(i)) {
      ++st.pops;
      const double t = solve_eikonal(g, i);
      ++st.eikonal_solves;
      if (t < g.time(i)) {
        g.time(i) = t;
        g.for_each_neighbor(i, [&](Index j) {
          // Unlock strictly-downwind locked neighbors; route them by the
          // value that woke them.
          if (g.state(j) == CellState::Frozen && !g.is_obstacle(j) &&
              t < g.time(j)) {
            g.state(j) = CellState::Narrow;
            queue.push(j, t);
          }
        });
      }
      g.state(i) = CellState::Frozen;
    }
    queue.advance();
    ++st.rounds;
  }
  st.propagation_seconds = clock.seconds();
  return st;
}

SolverStats solve(SolverKind kind, Grid& grid, std::span<const Index> start_cells,
                  const SolverParams& params) {
  switch (kind) {
    case SolverKind::FMM: return fmm_propagate(grid, start_cells);
    case SolverKind::FMMFib: return fmmfib_propagate(grid, start_cells);
    case SolverKind::SFMM: return sfmm_propagate(grid, start_cells);
    case SolverKind::UFMM: return ufmm_propagate(grid, start_cells, params.untidy);
    case SolverKind::GMM: return gmm_propagate(grid, start_cells);
    case SolverKind::FIM: return fim_propagate(grid, start_cells, params.fim_epsilon);
    case SolverKind::FSM: return fsm_propagate(grid, start_cells);
    case SolverKind::LSM: return lsm_propagate(grid, start_cells);
    case SolverKind::DDQM: return ddqm_propagate(grid, start_cells);
  }
  throw std::invalid_argument("solve: unknown solver kind");
}

}  // namespace eikonal
