// acceptance: end-to-end checks of the solver suite's documented guarantees.
// Each criterion prints one [PASS]/[FAIL] line ([INFO] for the non-gating
// timing observation); the process exits nonzero when any gating criterion
// fails. Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "eikonal/experiments.hpp"
#include "eikonal/grid.hpp"
#include "eikonal/solvers.hpp"
#include "eikonal/update.hpp"

using namespace eikonal;

namespace {

int g_failures = 0;

void report(bool ok, const char* name, const std::string& detail) {
  std::printf("[%s] %s — %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  if (!ok) ++g_failures;
}

void info(const char* name, const std::string& detail) {
  std::printf("[INFO] %s — %s\n", name, detail.c_str());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// The eight solvers that promise the exact first-order upwind solution.
// UFMM is excluded: its bucket queue trades a bounded quantization error
// for O(1) scheduling, so it gets its own error-bound criterion.
constexpr std::array<SolverKind, 8> kExactSolvers = {
    SolverKind::FMM, SolverKind::FMMFib, SolverKind::SFMM, SolverKind::GMM,
    SolverKind::FIM, SolverKind::FSM,    SolverKind::LSM,  SolverKind::DDQM,
};

struct Scenario {
  std::string name;
  Grid grid;
  Index source;
};

std::vector<Scenario> reference_scenarios() {
  std::vector<Scenario> list;
  auto add = [&](std::string name, Grid g, bool corner = false) {
    const Index src = corner ? near_corner_cell(g) : center_cell(g);
    list.push_back({std::move(name), std::move(g), src});
  };
  add("empty-50x50", gen_empty(2, 50));
  add("empty-200x200", gen_empty(2, 200));
  add("barriers-9-100x200", gen_barriers(2, 9, 10), /*corner=*/true);
  add("random-100x100-fmax10", gen_random(2, 100, 10.0, 42));
  add("random-100x100-fmax100", gen_random(2, 100, 100.0, 42));
  add("checkerboard-200x200-fmax100", gen_checkerboard(2, 200, 100.0));
  add("empty-22x22x22", gen_empty(3, 22));
  add("empty-10^4", gen_empty(4, 10));
  return list;
}

struct RunResult {
  std::vector<double> times;
  SolverStats stats;
};

RunResult run(SolverKind kind, const Scenario& sc,
              const SolverParams& params = {}) {
  Grid g = sc.grid;
  RunResult r;
  r.stats = solve(kind, g, std::span<const Index>(&sc.source, 1), params);
  r.times.assign(g.times().begin(), g.times().end());
  return r;
}

/// Max pointwise |a-b|; +inf when exactly one side is unreached.
double linf_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool ia = a[i] == kInf, ib = b[i] == kInf;
    if (ia && ib) continue;
    if (ia != ib) return kInf;
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

// --- criterion 1: all exact solvers produce the same field -----------------

bool criterion_equivalence(const std::vector<Scenario>& scenarios) {
  const auto t0 = std::chrono::steady_clock::now();
  const double tol = 1e-9;
  double worst = 0.0;
  std::string worst_at = "-";
  bool ok = true;
  for (const Scenario& sc : scenarios) {
    const RunResult ref = run(SolverKind::FMM, sc);
    for (SolverKind kind : kExactSolvers) {
      if (kind == SolverKind::FMM) continue;
      const RunResult r = run(kind, sc);
      const double d = linf_diff(r.times, ref.times);
      if (d > worst) {
        worst = d;
        worst_at = std::string(solver_name(kind)) + " on " + sc.name;
      }
      ok = ok && d <= tol;
    }
  }
  report(ok, "cross-solver equivalence",
         "8 solvers, 8 grids, Linf <= 1e-9; worst " + fmt(worst) + " (" +
             worst_at + "), " + fmt(seconds_since(t0)) + " s");
  return ok;
}

// --- criterion 2: first-order convergence to the true distance -------------

bool criterion_convergence() {
  const auto t0 = std::chrono::steady_clock::now();
  auto linf_vs_exact = [](std::size_t cells) {
    Grid g = gen_empty(2, cells);
    const Index src = center_cell(g);
    solve(SolverKind::FMM, g, std::span<const Index>(&src, 1));
    const auto c = g.coords_of(src);
    double worst = 0.0;
    for (Index i = 0; i < g.size(); ++i) {
      const auto p = g.coords_of(i);
      const double exact =
          g.spacing() * std::hypot(double(p[0]) - double(c[0]),
                                   double(p[1]) - double(c[1]));
      worst = std::max(worst, std::abs(g.time(i) - exact));
    }
    return worst;
  };
  const double e50 = linf_vs_exact(50);
  const double e100 = linf_vs_exact(100);
  const double e200 = linf_vs_exact(200);
  const double ratio = e50 / e200;
  const bool ok = e50 > e100 && e100 > e200 && ratio >= 2.5 && ratio <= 6.0;
  report(ok, "analytic convergence",
         "Linf vs Euclidean distance " + fmt(e50) + " > " + fmt(e100) + " > " +
             fmt(e200) + ", 50->200 ratio " + fmt(ratio) + " in [2.5, 6], " +
             fmt(seconds_since(t0)) + " s");
  return ok;
}

// --- criterion 3: UFMM stays inside its quantization error bound -----------

bool criterion_ufmm_error() {
  const auto t0 = std::chrono::steady_clock::now();
  Scenario sc{"random-100x100-fmax100", gen_random(2, 100, 100.0, 42), 0};
  sc.source = center_cell(sc.grid);
  const RunResult ref = run(SolverKind::FMM, sc);
  const RunResult ufmm = run(SolverKind::UFMM, sc);
  const ErrorNorms err = error_norms(ufmm.times, ref.times, sc.grid.spacing(),
                                     sc.grid.ndims());
  const bool ok = err.linf <= 5e-3 && err.l1 <= 1e-2;
  report(ok, "untidy queue error bound",
         "random 100x100 fmax=100, default buckets: Linf " + fmt(err.linf) +
             " <= 5e-3, L1 " + fmt(err.l1) + " <= 1e-2, " +
             fmt(seconds_since(t0)) + " s");
  return ok;
}

// --- criterion 4: sweeping converges in 2^N passes without obstacles -------

bool criterion_fsm_sweeps() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (std::size_t ndims : {2u, 3u, 4u}) {
    const std::size_t cells = ndims == 2 ? 50 : (ndims == 3 ? 14 : 7);
    Scenario sc{"", gen_empty(ndims, cells), 0};
    sc.source = center_cell(sc.grid);
    const RunResult r = run(SolverKind::FSM, sc);
    const std::uint64_t budget = 1ull << ndims;
    ok = ok && r.stats.changing_sweeps <= budget;
    detail += std::to_string(ndims) + "D " +
              std::to_string(r.stats.changing_sweeps) + "<=" +
              std::to_string(budget) + " ";
  }
  Scenario walls{"", gen_barriers(2, 9, 10), 0};
  walls.source = near_corner_cell(walls.grid);
  const RunResult r = run(SolverKind::FSM, walls);
  ok = ok && r.stats.changing_sweeps > 4;
  report(ok, "sweeping pass counts",
         "empty maps: changing sweeps " + detail + "; 9-barrier map " +
             std::to_string(r.stats.changing_sweeps) + " > 4, " +
             fmt(seconds_since(t0)) + " s");
  return ok;
}

// --- criterion 5: lock sweeping does strictly less local work --------------

bool criterion_lsm_work() {
  const auto t0 = std::chrono::steady_clock::now();
  Scenario walls{"", gen_barriers(2, 9, 10), 0};
  walls.source = near_corner_cell(walls.grid);
  const RunResult fsm = run(SolverKind::FSM, walls);
  const RunResult lsm = run(SolverKind::LSM, walls);
  const bool ok = lsm.stats.eikonal_solves < fsm.stats.eikonal_solves;
  report(ok, "lock sweeping work reduction",
         "9-barrier map solves: LSM " + std::to_string(lsm.stats.eikonal_solves) +
             " < FSM " + std::to_string(fsm.stats.eikonal_solves) + ", " +
             fmt(seconds_since(t0)) + " s");
  return ok;
}

// --- criterion 6: marching pops are causally ordered ------------------------

bool criterion_causality(const std::vector<Scenario>& scenarios) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (const Scenario& sc : scenarios)
    for (SolverKind kind : {SolverKind::FMM, SolverKind::FMMFib})
      ok = ok && run(kind, sc).stats.monotone_pops;
  report(ok, "marching causality",
         std::string("heap pop keys non-decreasing for fmm and fmmfib on all "
                     "8 grids, ") +
             fmt(seconds_since(t0)) + " s");
  return ok;
}

// --- criterion 7: solutions are fixed points of the local update ------------

double fixed_point_residual(SolverKind kind, const Scenario& sc,
                            const SolverParams& params = {}) {
  Grid g = sc.grid;
  solve(kind, g, std::span<const Index>(&sc.source, 1), params);
  double worst = 0.0;
  for (Index i = 0; i < g.size(); ++i) {
    if (i == sc.source || g.time(i) == kInf) continue;
    worst = std::max(worst, std::abs(solve_eikonal(g, i) - g.time(i)));
  }
  return worst;
}

bool criterion_fixed_point(const std::vector<Scenario>& scenarios) {
  const auto t0 = std::chrono::steady_clock::now();
  const double tol = 1e-9;
  double worst = 0.0;
  std::string worst_at = "-";
  bool ok = true;
  for (const Scenario& sc : scenarios) {
    for (SolverKind kind : kExactSolvers) {
      const double d = fixed_point_residual(kind, sc);
      if (d > worst) {
        worst = d;
        worst_at = std::string(solver_name(kind)) + " on " + sc.name;
      }
      ok = ok && d <= tol;
    }
  }
  // UFMM reaches the fixed point only where its scheduling error vanishes
  // (constant velocity). On heterogeneous maps its residual sits at the
  // quantization-error scale covered by the error-bound criterion, orders
  // of magnitude above this tolerance, so that case is reported instead of
  // gated.
  const double ufmm_const = fixed_point_residual(SolverKind::UFMM, scenarios[0]);
  ok = ok && ufmm_const <= tol;
  report(ok, "fixed-point property",
         "8 solvers x 8 grids + ufmm on empty-50x50: worst residual " +
             fmt(std::max(worst, ufmm_const)) + " (" + worst_at + ") <= 1e-9, " +
             fmt(seconds_since(t0)) + " s");
  const Scenario& rnd = scenarios[4];
  info("fixed-point property (ufmm, approximate by design)",
       "residual " + fmt(fixed_point_residual(SolverKind::UFMM, rnd)) + " on " +
           rnd.name + " — bounded by the error-bound criterion, not gated");
  return ok;
}

// --- criterion 8: threshold feedback regimes -------------------------------

bool criterion_update_step() {
  struct Case {
    std::size_t c1, c_total;
    double expected;
  };
  // Ratio <= 0.65 widens the step 1.5x, >= 0.75 halves it (an empty round
  // counts as ratio 1), in between keeps it.
  const Case cases[] = {
      {60, 100, 3.0}, {65, 100, 3.0}, {70, 100, 2.0},
      {75, 100, 1.0}, {80, 100, 1.0}, {0, 0, 1.0},
  };
  bool ok = true;
  std::string detail;
  for (const Case& c : cases) {
    const double got = update_step(2.0, c.c1, c.c_total);
    ok = ok && got == c.expected;
    detail += std::to_string(c.c1) + "/" + std::to_string(c.c_total) + "->" +
              fmt(got) + " ";
  }
  report(ok, "threshold step feedback", detail + "(x1.5 / keep / :2)");
  return ok;
}

// --- criterion 9 (informational): simplified queue is not slower -----------

void criterion_timing_info() {
  Scenario sc{"empty-2000x2000", gen_empty(2, 2000), 0};
  sc.source = center_cell(sc.grid);
  auto mean_seconds = [&](SolverKind kind) {
    run(kind, sc);  // warm-up
    double sum = 0.0;
    const int runs = 3;
    for (int i = 0; i < runs; ++i) sum += run(kind, sc).stats.propagation_seconds;
    return sum / runs;
  };
  const double fmm = mean_seconds(SolverKind::FMM);
  const double sfmm = mean_seconds(SolverKind::SFMM);
  info("timing sanity (non-gating)",
       "empty 2000x2000 mean of 3: sfmm " + fmt(sfmm) + " s vs fmm " +
           fmt(fmm) + " s (" + (sfmm <= fmm ? "sfmm <= fmm" : "sfmm slower") +
           "; hardware-dependent, never fails the suite)");
}

// --- criterion 10: homogeneity under velocity scaling -----------------------

bool criterion_homogeneity() {
  const auto t0 = std::chrono::steady_clock::now();
  const double tol = 1e-9;
  Scenario base{"random-100x100-fmax100", gen_random(2, 100, 100.0, 42), 0};
  base.source = center_cell(base.grid);

  std::vector<double> scaled_f(base.grid.velocities().begin(),
                               base.grid.velocities().end());
  for (double& f : scaled_f) f *= 10.0;
  Scenario fast{"scaled", Grid(base.grid.dims(), base.grid.spacing(),
                               std::move(scaled_f)),
                base.source};

  bool ok = true;
  double worst = 0.0;
  std::string worst_at = "-";
  for (SolverKind kind : kExactSolvers) {
    const RunResult slow = run(kind, base);
    const RunResult quick = run(kind, fast);
    double d = 0.0;
    for (std::size_t i = 0; i < slow.times.size(); ++i)
      d = std::max(d, std::abs(quick.times[i] - slow.times[i] / 10.0));
    if (d > worst) {
      worst = d;
      worst_at = std::string(solver_name(kind));
    }
    ok = ok && d <= tol;
  }
  report(ok, "homogeneity under velocity scaling",
         "F x10 => T / 10 on random 100x100: worst " + fmt(worst) + " (" +
             worst_at + ") <= 1e-9, " + fmt(seconds_since(t0)) + " s");

  // UFMM's bucket boundaries do not scale with the field, so its pop order
  // (and therefore its small error pattern) is not homogeneous; covered by
  // the error-bound criterion instead.
  const RunResult slow = run(SolverKind::UFMM, base);
  const RunResult quick = run(SolverKind::UFMM, fast);
  double d = 0.0;
  for (std::size_t i = 0; i < slow.times.size(); ++i)
    d = std::max(d, std::abs(quick.times[i] - slow.times[i] / 10.0));
  info("homogeneity (ufmm, approximate by design)",
       "deviation " + fmt(d) + " — tracks the quantization error, not gated");
  return ok;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Scenario> scenarios = reference_scenarios();

  criterion_equivalence(scenarios);
  criterion_convergence();
  criterion_ufmm_error();
  criterion_fsm_sweeps();
  criterion_lsm_work();
  criterion_causality(scenarios);
  criterion_fixed_point(scenarios);
  criterion_update_step();
  criterion_timing_info();
  criterion_homogeneity();

  std::printf("%s: %d gating criterion(s) failed, total %.1f s\n",
              g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              g_failures, seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
