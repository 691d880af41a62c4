#include "eikonal/fmsm.hpp"

#include <algorithm>
#include <cmath>

#include "eikonal/classic_solvers.hpp"

namespace eikonal {

CoarseProblem build_coarse_problem(const Problem& problem,
                                   const CellDecomposition& cells) {
  const Grid& g = problem.grid;
  Point origin = cells.center(0);
  // hc_x == hc_y for the square decompositions used with FMSM; keep the
  // x spacing as the nominal h_c.
  Grid coarse(cells.cells_x, cells.cells_y, cells.hc_x, origin.x, origin.y);

  CoarseProblem cp;
  cp.problem.grid = coarse;

  // Coarse speed = F at actual cell centers; snap incoming coordinates to
  // the nearest cell so remainder cells probe their true center.
  const CellDecomposition decomp = cells;
  SpeedFn fine_speed = problem.speed;
  cp.problem.speed = [decomp, fine_speed, coarse](double x, double y) {
    int cx = std::clamp(
        static_cast<int>(std::lround((x - coarse.x0) / coarse.h)), 0,
        coarse.m - 1);
    int cy = std::clamp(
        static_cast<int>(std::lround((y - coarse.y0) / coarse.h)), 0,
        coarse.n - 1);
    Point c = decomp.center(decomp.cell_index(cx, cy));
    return fine_speed(c.x, c.y);
  };

  std::vector<double> best_cost(cells.cell_count(), kInf);
  if (!problem.exit_points.empty()) {
    // Point sources discretize Q directly on the coarse lattice: every
    // cell whose center ties as nearest to the source becomes a coarse
    // exit (a center source between cells seeds up to four of them).
    const bool single = problem.exit_points.size() == 1;
    for (size_t k = 0; k < problem.exit_points.size(); ++k) {
      const Point q = problem.exit_points[k];
      double dmin = kInf;
      for (int cell = 0; cell < cells.cell_count(); ++cell) {
        Point c = cells.center(cell);
        dmin = std::min(dmin, std::hypot(q.x - c.x, q.y - c.y));
      }
      const double tie = 1e-12 * (g.h + dmin);
      for (int cell = 0; cell < cells.cell_count(); ++cell) {
        Point c = cells.center(cell);
        double dist = std::hypot(q.x - c.x, q.y - c.y);
        if (dist > dmin + tie) continue;
        double cost = single ? problem.exit_point_cost[k]
                             : problem.exit_point_cost[k] +
                                   dist / fine_speed(c.x, c.y);
        best_cost[cell] = std::min(best_cost[cell], cost);
      }
    }
  } else {
    // General exit sets: cells containing exit nodes, with a one-sided
    // cost from the cell center to the nearest exit node inside.
    const bool single_exit = problem.exit_nodes.size() == 1;
    for (size_t k = 0; k < problem.exit_nodes.size(); ++k) {
      NodeIndex nd = g.node(problem.exit_nodes[k]);
      int cell = cells.cell_of_node(nd.i, nd.j);
      Point c = cells.center(cell);
      double dist = std::hypot(g.x(nd.i) - c.x, g.y(nd.j) - c.y);
      double cost = single_exit
                        ? problem.exit_cost[k]
                        : problem.exit_cost[k] + dist / fine_speed(c.x, c.y);
      best_cost[cell] = std::min(best_cost[cell], cost);
    }
  }
  for (int cell = 0; cell < cells.cell_count(); ++cell) {
    if (!std::isfinite(best_cost[cell])) continue;
    cp.problem.exit_nodes.push_back(cell);
    cp.problem.exit_cost.push_back(best_cost[cell]);
  }
  return cp;
}

std::vector<SweepDir> fmsm_sweep_directions(bool west_accepted,
                                            bool east_accepted,
                                            bool south_accepted,
                                            bool north_accepted) {
  // Inflow x-sign: from the west when only the west neighbor is upwind,
  // from the east when only the east one is; open otherwise.
  std::vector<int> xs, ys;  // 0 = W/S component, 1 = E/N component
  if (west_accepted && !east_accepted) xs = {0};
  else if (east_accepted && !west_accepted) xs = {1};
  else xs = {0, 1};
  if (south_accepted && !north_accepted) ys = {0};
  else if (north_accepted && !south_accepted) ys = {1};
  else ys = {0, 1};

  auto dir_from = [](int xe, int yn) {
    if (yn && xe) return SweepDir::NE;
    if (yn && !xe) return SweepDir::NW;
    if (!yn && xe) return SweepDir::SE;
    return SweepDir::SW;
  };
  std::vector<SweepDir> dirs;
  for (int y : ys)
    for (int x : xs) dirs.push_back(dir_from(x, y));
  // Fixed processing order NE, NW, SE, SW.
  std::sort(dirs.begin(), dirs.end(), [](SweepDir a, SweepDir b) {
    auto rank = [](SweepDir d) {
      switch (d) {
        case SweepDir::NE: return 0;
        case SweepDir::NW: return 1;
        case SweepDir::SE: return 2;
        case SweepDir::SW: return 3;
      }
      return 4;
    };
    return rank(a) < rank(b);
  });
  return dirs;
}

SolverOutput fmsm_solve(const Problem& problem,
                        const CellDecomposition& cells) {
  if (cells.cells_x < 2 || cells.cells_y < 2)
    throw ConfigError("fmsm needs at least 2x2 cells");

  const Grid& g = problem.grid;
  const int J = cells.cell_count();

  // Part I: coarse FMM.  The acceptance order is rebuilt by sorting on
  // coarse values quantized to ~1e-9: heap pop order is sensitive to
  // last-ulp asymmetries in the coarse solve, and near-ties must resolve
  // by cell index regardless of float noise.  Sorting by non-decreasing
  // value keeps this a valid acceptance order.
  CoarseProblem coarse = build_coarse_problem(problem, cells);
  SolverOutput coarse_out = fmm_solve(coarse.problem);

  std::vector<int> order(J);
  {
    double vmax = coarse.problem.grid.h;
    for (int cell = 0; cell < J; ++cell)
      if (std::isfinite(coarse_out.values[cell]))
        vmax = std::max(vmax, coarse_out.values[cell]);
    const double quantum = 1e-9 * vmax;
    std::vector<long long> key(J);
    for (int cell = 0; cell < J; ++cell) {
      double v = coarse_out.values[cell];
      key[cell] = std::isfinite(v)
                      ? static_cast<long long>(std::floor(v / quantum))
                      : std::numeric_limits<long long>::max();
    }
    for (int cell = 0; cell < J; ++cell) order[cell] = cell;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (key[a] != key[b]) return key[a] < key[b];
      return a < b;
    });
  }

  std::vector<int> rank(J);
  for (int p = 0; p < J; ++p) rank[order[p]] = p;
  std::vector<char> cell_is_exit(J, 0);
  for (int cell : coarse.problem.exit_nodes) cell_is_exit[cell] = 1;

  // Part II: fine grid pass in acceptance order.
  SolverOutput out;
  out.values = ValueField(g.m, g.n, kInf);
  ValueField& v = out.values;
  std::vector<char> is_exit(g.size(), 0);
  for (size_t k = 0; k < problem.exit_nodes.size(); ++k) {
    v[problem.exit_nodes[k]] = problem.exit_cost[k];
    is_exit[problem.exit_nodes[k]] = 1;
  }
  out.heap_removals = coarse_out.heap_removals;
  out.node_updates = coarse_out.node_updates;

  auto full_sweep = [&](const CellRect& r, SweepDir dir, bool directional) {
    const AxisOrder io = sweep_i_order(dir, r), jo = sweep_j_order(dir, r);
    bool changed = false;
    for (int i = io.begin; i != io.end; i += io.step) {
      for (int j = jo.begin; j != jo.end; j += jo.step) {
        int idx = g.index(i, j);
        if (is_exit[idx]) continue;
        ++out.node_updates;
        NeighborValues nb = gather_neighbors(v, i, j);
        double f = problem.speed_at(i, j);
        double cand = directional ? directional_update(nb, dir, f, g.h)
                                  : node_update(nb, f, g.h);
        if (cand < v[idx]) {
          v[idx] = cand;
          changed = true;
        }
      }
    }
    return changed;
  };

  for (int p = 0; p < J; ++p) {
    const int cell = order[p];
    const CellRect r = cell_rect(cells, cell);
    if (cell_is_exit[cell]) {
      // Q-cells: standard FSM to convergence with the halo frozen.
      long long sweep_number = 0;
      bool changed = true;
      while (changed) {
        changed = full_sweep(r, sweep_direction(sweep_number), false);
        ++sweep_number;
      }
      out.sweeps += sweep_number;
      continue;
    }
    bool acc[4] = {false, false, false, false};  // W, E, S, N
    const Side sides[4] = {Side::West, Side::East, Side::South, Side::North};
    for (int d = 0; d < 4; ++d) {
      int nb = cells.neighbor(cell, sides[d]);
      acc[d] = nb >= 0 && rank[nb] < p;
    }
    std::vector<SweepDir> dirs =
        fmsm_sweep_directions(acc[0], acc[1], acc[2], acc[3]);
    for (SweepDir dir : dirs) full_sweep(r, dir, true);
    out.sweeps += static_cast<long long>(dirs.size());
  }

  out.hybrid.cell_sweeps = out.sweeps;
  out.hybrid.avs = static_cast<double>(out.sweeps) / J;
  return out;
}

}  // namespace eikonal
