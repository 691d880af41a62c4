#include "eikonal/heap_cell.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "eikonal/indexed_min_heap.hpp"

namespace eikonal {

namespace {

constexpr SweepDir kFlagOrder[4] = {SweepDir::NE, SweepDir::NW, SweepDir::SE,
                                    SweepDir::SW};
constexpr SweepDir kRotation[4] = {SweepDir::SW, SweepDir::NW, SweepDir::NE,
                                   SweepDir::SE};

inline int flag_bit(SweepDir d) { return 1 << static_cast<int>(d); }

// Node strip of a cell facing one side, plus the offset to the node just
// across the border.
struct Strip {
  int i0, j0;       // first node
  int di, dj;       // step along the strip (ascending coordinate)
  int len;
  int across_di, across_dj;
};

Strip strip_for(const CellDecomposition& d, int cell, Side side) {
  const int cx = d.cx_of(cell), cy = d.cy_of(cell);
  const int ib = d.i_begin[cx], ie = d.i_end[cx];
  const int jb = d.j_begin[cy], je = d.j_end[cy];
  switch (side) {
    case Side::West: return {ib, jb, 0, 1, je - jb, -1, 0};
    case Side::East: return {ie - 1, jb, 0, 1, je - jb, 1, 0};
    case Side::South: return {ib, jb, 1, 0, ie - ib, 0, -1};
    case Side::North: return {ib, je - 1, 1, 0, ie - ib, 0, 1};
  }
  return {0, 0, 0, 0, 0, 0, 0};
}

// Shared state of one heap-cell run.
struct HeapCellRun {
  const Problem& problem;
  const CellDecomposition& cells;
  ValueField v;
  std::vector<char> is_exit;
  std::vector<char> unlocked;  // scratch, only cell-rect entries touched
  SolverOutput* out = nullptr;

  explicit HeapCellRun(const Problem& p, const CellDecomposition& d)
      : problem(p),
        cells(d),
        v(p.grid.m, p.grid.n, kInf),
        is_exit(p.grid.size(), 0),
        unlocked(p.grid.size(), 0) {
    for (size_t k = 0; k < p.exit_nodes.size(); ++k) {
      v[p.exit_nodes[k]] = p.exit_cost[k];
      is_exit[p.exit_nodes[k]] = 1;
    }
  }

  // Fresh locking state for one cell processing: everything locked except
  // nodes adjacent to the frozen halo and to exit nodes inside the cell.
  void reset_locks(int cell) {
    const Grid& g = problem.grid;
    const CellRect r = cell_rect(cells, cell);
    for (int j = r.jb; j < r.je; ++j)
      for (int i = r.ib; i < r.ie; ++i) unlocked[g.index(i, j)] = 0;

    auto unlock = [&](int i, int j) {
      int idx = g.index(i, j);
      if (!is_exit[idx]) unlocked[idx] = 1;
    };
    if (r.ib > 0)
      for (int j = r.jb; j < r.je; ++j) unlock(r.ib, j);
    if (r.ie < g.m)
      for (int j = r.jb; j < r.je; ++j) unlock(r.ie - 1, j);
    if (r.jb > 0)
      for (int i = r.ib; i < r.ie; ++i) unlock(i, r.jb);
    if (r.je < g.n)
      for (int i = r.ib; i < r.ie; ++i) unlock(i, r.je - 1);

    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};
    for (int j = r.jb; j < r.je; ++j)
      for (int i = r.ib; i < r.ie; ++i) {
        if (!is_exit[g.index(i, j)]) continue;
        for (int d = 0; d < 4; ++d) {
          int ni = i + di[d], nj = j + dj[d];
          if (r.contains(ni, nj)) unlock(ni, nj);
        }
      }
  }

  // One locking sweep over the cell in direction dir; the halo is frozen
  // Dirichlet data.  Returns true if any value decreased.
  bool locked_sweep(int cell, SweepDir dir) {
    const Grid& g = problem.grid;
    const CellRect r = cell_rect(cells, cell);
    const AxisOrder io = sweep_i_order(dir, r), jo = sweep_j_order(dir, r);
    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};
    bool changed = false;
    for (int i = io.begin; i != io.end; i += io.step) {
      for (int j = jo.begin; j != jo.end; j += jo.step) {
        int idx = g.index(i, j);
        if (!unlocked[idx]) continue;
        unlocked[idx] = 0;
        ++out->node_updates;
        double cand = node_update(gather_neighbors(v, i, j),
                                  problem.speed_at(i, j), g.h);
        if (cand < v[idx]) {
          v[idx] = cand;
          changed = true;
          for (int d = 0; d < 4; ++d) {
            int ni = i + di[d], nj = j + dj[d];
            if (!r.contains(ni, nj)) continue;
            int nidx = g.index(ni, nj);
            if (!is_exit[nidx] && v[nidx] > cand) unlocked[nidx] = 1;
          }
        }
      }
    }
    return changed;
  }

  // HCM processing: locking sweeps to convergence, flagged directions
  // first, then the Algorithm-3 rotation.
  long long process_to_convergence(int cell, unsigned flags) {
    SweepDir perm[4];
    int at = 0;
    for (SweepDir d : kFlagOrder)
      if (flags & flag_bit(d)) perm[at++] = d;
    for (SweepDir d : kRotation)
      if (!(flags & flag_bit(d))) perm[at++] = d;

    reset_locks(cell);
    long long sweeps = 0;
    bool changed = true;
    while (changed) {
      SweepDir dir = sweeps < 4 ? perm[sweeps] : kRotation[sweeps % 4];
      changed = locked_sweep(cell, dir);
      ++sweeps;
    }
    return sweeps;
  }

  // FHCM processing: exactly one sweep per raised flag.
  long long process_flagged_once(int cell, unsigned flags) {
    assert(flags != 0);
    reset_locks(cell);
    long long sweeps = 0;
    for (SweepDir d : kFlagOrder) {
      if (!(flags & flag_bit(d))) continue;
      locked_sweep(cell, d);
      ++sweeps;
    }
    return sweeps;
  }

  std::vector<double> snapshot(int cell, Side side) const {
    Strip s = strip_for(cells, cell, side);
    std::vector<double> vals(s.len);
    for (int t = 0; t < s.len; ++t)
      vals[t] = v.at(s.i0 + t * s.di, s.j0 + t * s.dj);
    return vals;
  }
};

}  // namespace

BorderScanResult scan_cell_boundary(const Problem& problem,
                                    const CellDecomposition& cells, int cell,
                                    Side side, const ValueField& v,
                                    const std::vector<double>& before,
                                    bool first_removal,
                                    bool use_monotonicity) {
  BorderScanResult res;
  const Grid& g = problem.grid;
  const Strip s = strip_for(cells, cell, side);
  assert(static_cast<int>(before.size()) == s.len);

  auto is_exit = [&](int idx) {
    return std::binary_search(problem.exit_nodes.begin(),
                              problem.exit_nodes.end(), idx);
  };

  double vmax = -kInf;
  int argmax = 0;
  for (int t = 0; t < s.len; ++t) {
    const int i = s.i0 + t * s.di, j = s.j0 + t * s.dj;
    const int idx = g.index(i, j);
    const double vi = v[idx];
    if (vi > vmax) {
      vmax = vi;
      argmax = t;
    }
    const int aidx = g.index(i + s.across_di, j + s.across_dj);
    const bool vi_changed = vi < before[t];
    if (!is_exit(aidx) && vi < v[aidx] &&
        (vi_changed || (first_removal && is_exit(idx))))
      res.should_add = true;
  }

  // Cell-value candidate from the largest facing boundary value.
  if (std::isfinite(vmax)) {
    const double hc = cells.hc_along(side);
    const double step = 0.5 * (g.h + hc);
    const int i = s.i0 + argmax * s.di, j = s.j0 + argmax * s.dj;
    double px = g.x(i) + step * s.across_di;
    double py = g.y(j) + step * s.across_dj;
    px = std::clamp(px, g.x0, g.x(g.m - 1));
    py = std::clamp(py, g.y0, g.y(g.n - 1));
    res.cell_value_cand =
        cell_value_candidate(vmax, problem.speed(px, py), g.h, hc);
  }

  if (res.should_add) {
    const Side from = opposite(side);
    if (use_monotonicity) {
      // Monotonicity sequences run north-to-south / west-to-east; the
      // strip is stored south-to-north for vertical borders.
      std::vector<double> seq(s.len);
      const bool vertical = (side == Side::West || side == Side::East);
      for (int t = 0; t < s.len; ++t) {
        const int u = vertical ? s.len - 1 - t : t;
        seq[t] = v.at(s.i0 + u * s.di, s.j0 + u * s.dj);
      }
      res.flags = monotonicity_flags(seq, from);
      res.mon_checked = true;
      res.mon_single = res.flags.size() == 1;
    } else {
      auto both = monotonicity_sides(from);
      res.flags.assign(both.begin(), both.end());
    }
  }
  return res;
}

namespace {

SolverOutput heap_cell_solve(const Problem& problem,
                             const CellDecomposition& cells, bool fast) {
  const int J = cells.cell_count();
  HeapCellRun run(problem, cells);
  SolverOutput out;
  run.out = &out;

  std::vector<double> cell_value(J, kInf);
  std::vector<unsigned> flags(J, 0);
  std::vector<char> first_done(J, 0);
  IndexedMinHeap heap(J);

  // Cells intersecting the exit set start on the list with
  // value = max exit cost inside the cell.
  for (size_t k = 0; k < problem.exit_nodes.size(); ++k) {
    NodeIndex nd = problem.grid.node(problem.exit_nodes[k]);
    int cell = cells.cell_of_node(nd.i, nd.j);
    double q = problem.exit_cost[k];
    cell_value[cell] =
        std::isfinite(cell_value[cell]) ? std::max(cell_value[cell], q) : q;
  }
  for (int cell = 0; cell < J; ++cell) {
    if (!std::isfinite(cell_value[cell])) continue;
    heap.insert(cell, cell_value[cell]);
    if (fast) flags[cell] = 0xF;  // Q-cells start with all four flags
  }

  const long long removal_budget = 100LL * J + 16;
  const Side sides[4] = {Side::West, Side::East, Side::South, Side::North};

  while (!heap.empty()) {
    const int cell = heap.pop_min();
    ++out.heap_removals;
    if (out.heap_removals > removal_budget)
      throw std::runtime_error("heap-cell removal budget exceeded");

    std::vector<double> before[4];
    for (int d = 0; d < 4; ++d)
      if (cells.neighbor(cell, sides[d]) >= 0)
        before[d] = run.snapshot(cell, sides[d]);

    const unsigned my_flags = flags[cell];
    flags[cell] = 0;
    out.sweeps += fast ? run.process_flagged_once(cell, my_flags)
                       : run.process_to_convergence(cell, my_flags);

    const bool first_removal = !first_done[cell];
    first_done[cell] = 1;

    for (int d = 0; d < 4; ++d) {
      const int nb = cells.neighbor(cell, sides[d]);
      if (nb < 0) continue;
      BorderScanResult scan =
          scan_cell_boundary(problem, cells, cell, sides[d], run.v, before[d],
                             first_removal, fast);
      // Cell values update for every neighbor, including those in the heap.
      if (scan.cell_value_cand < cell_value[nb]) {
        cell_value[nb] = scan.cell_value_cand;
        if (heap.contains(nb)) heap.decrease_key(nb, cell_value[nb]);
      }
      if (scan.should_add) {
        for (SweepDir f : scan.flags) flags[nb] |= flag_bit(f);
        if (scan.mon_checked) {
          ++out.hybrid.mon_checks;
          if (scan.mon_single) ++out.hybrid.mon_single;
        }
        if (!heap.contains(nb)) heap.insert(nb, cell_value[nb]);
      }
    }
  }

  out.values = std::move(run.v);
  out.hybrid.cell_removals = out.heap_removals;
  out.hybrid.cell_sweeps = out.sweeps;
  out.hybrid.avhr = static_cast<double>(out.heap_removals) / J;
  out.hybrid.avs = static_cast<double>(out.sweeps) / J;
  out.hybrid.mon_pct = out.hybrid.mon_checks == 0
                           ? 0.0
                           : 100.0 * out.hybrid.mon_single /
                                 static_cast<double>(out.hybrid.mon_checks);
  return out;
}

}  // namespace

SolverOutput hcm_solve(const Problem& problem,
                       const CellDecomposition& cells) {
  return heap_cell_solve(problem, cells, /*fast=*/false);
}

SolverOutput fhcm_solve(const Problem& problem,
                        const CellDecomposition& cells) {
  return heap_cell_solve(problem, cells, /*fast=*/true);
}

}  // namespace eikonal
