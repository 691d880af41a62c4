#include "eikonal/classic_solvers.hpp"

#include <cmath>

#include "eikonal/indexed_min_heap.hpp"

namespace eikonal {

namespace {

enum class Label : unsigned char { Far, Considered, Accepted };

ValueField initial_values(const Problem& p) {
  ValueField v(p.grid.m, p.grid.n, kInf);
  for (size_t k = 0; k < p.exit_nodes.size(); ++k)
    v[p.exit_nodes[k]] = p.exit_cost[k];
  return v;
}

std::vector<char> exit_mask(const Problem& p) {
  std::vector<char> mask(p.grid.size(), 0);
  for (int idx : p.exit_nodes) mask[idx] = 1;
  return mask;
}

}  // namespace

SolverOutput fmm_solve(const Problem& problem, const FmmOptions& opts) {
  const Grid& g = problem.grid;
  SolverOutput out;
  out.values = initial_values(problem);
  ValueField& v = out.values;

  std::vector<Label> label(g.size(), Label::Far);
  const std::vector<char> is_exit = exit_mask(problem);
  for (int idx : problem.exit_nodes) label[idx] = Label::Accepted;

  IndexedMinHeap heap(g.size());

  const int di[4] = {1, -1, 0, 0};
  const int dj[4] = {0, 0, 1, -1};

  auto candidate = [&](int i, int j) {
    ++out.node_updates;
    return node_update(gather_neighbors(v, i, j), problem.speed_at(i, j), g.h);
  };

  // Initialization: every Far neighbor of an accepted exit node becomes
  // Considered with a full node update.
  for (int idx : problem.exit_nodes) {
    NodeIndex nd = g.node(idx);
    for (int d = 0; d < 4; ++d) {
      int ni = nd.i + di[d], nj = nd.j + dj[d];
      if (!g.contains(ni, nj)) continue;
      int nidx = g.index(ni, nj);
      if (label[nidx] != Label::Far) continue;
      label[nidx] = Label::Considered;
      double cand = candidate(ni, nj);
      if (cand < v[nidx]) v[nidx] = cand;
      heap.insert(nidx, v[nidx]);
    }
  }

  if (opts.record_acceptance_order)
    out.acceptance_order.reserve(g.size());

  while (!heap.empty()) {
    int idx = heap.pop_min();
    ++out.heap_removals;
    label[idx] = Label::Accepted;
    if (opts.record_acceptance_order) out.acceptance_order.push_back(idx);

    NodeIndex nd = g.node(idx);
    for (int d = 0; d < 4; ++d) {
      int ni = nd.i + di[d], nj = nd.j + dj[d];
      if (!g.contains(ni, nj)) continue;
      int nidx = g.index(ni, nj);
      // Recomputing an Accepted neighbor is a no-op by causality; skip it.
      if (label[nidx] == Label::Accepted || is_exit[nidx]) continue;
      double cand = candidate(ni, nj);
      if (label[nidx] == Label::Far) {
        label[nidx] = Label::Considered;
        if (cand < v[nidx]) v[nidx] = cand;
        heap.insert(nidx, v[nidx]);
      } else if (cand < v[nidx]) {
        v[nidx] = cand;
        heap.decrease_key(nidx, cand);
      }
    }
  }
  return out;
}

SweepDir sweep_direction(long long sweep_number) {
  return static_cast<SweepDir>(sweep_number % 4);
}

std::pair<std::vector<int>, std::vector<int>> sweep_order(
    long long sweep_number, int m, int n) {
  const int dir = static_cast<int>(sweep_number % 4);
  const bool i_asc = (dir == 0 || dir == 1);
  const bool j_asc = (dir == 0 || dir == 3);
  std::vector<int> iord(m), jord(n);
  for (int k = 0; k < m; ++k) iord[k] = i_asc ? k : m - 1 - k;
  for (int k = 0; k < n; ++k) jord[k] = j_asc ? k : n - 1 - k;
  return {std::move(iord), std::move(jord)};
}

namespace {

// Axis traversal for one sweep direction, shared by all sweeping loops.
struct AxisOrder {
  int begin, end, step;
};

AxisOrder i_order(SweepDir d, int m) {
  bool asc = (d == SweepDir::SW || d == SweepDir::NW);
  return asc ? AxisOrder{0, m, 1} : AxisOrder{m - 1, -1, -1};
}

AxisOrder j_order(SweepDir d, int n) {
  bool asc = (d == SweepDir::SW || d == SweepDir::SE);
  return asc ? AxisOrder{0, n, 1} : AxisOrder{n - 1, -1, -1};
}

}  // namespace

SolverOutput fsm_solve(const Problem& problem) {
  const Grid& g = problem.grid;
  SolverOutput out;
  out.values = initial_values(problem);
  ValueField& v = out.values;
  const std::vector<char> is_exit = exit_mask(problem);

  long long sweep_number = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    SweepDir dir = sweep_direction(sweep_number);
    AxisOrder io = i_order(dir, g.m), jo = j_order(dir, g.n);
    for (int i = io.begin; i != io.end; i += io.step) {
      for (int j = jo.begin; j != jo.end; j += jo.step) {
        int idx = g.index(i, j);
        if (is_exit[idx]) continue;
        ++out.node_updates;
        double cand =
            node_update(gather_neighbors(v, i, j), problem.speed_at(i, j), g.h);
        if (cand < v[idx]) {
          v[idx] = cand;
          changed = true;
        }
      }
    }
    ++sweep_number;
  }
  out.sweeps = sweep_number;
  return out;
}

SolverOutput lsm_solve(const Problem& problem) {
  const Grid& g = problem.grid;
  SolverOutput out;
  out.values = initial_values(problem);
  ValueField& v = out.values;
  const std::vector<char> is_exit = exit_mask(problem);

  const int di[4] = {1, -1, 0, 0};
  const int dj[4] = {0, 0, 1, -1};

  // Everything starts locked except non-exit nodes adjacent to the exit set.
  std::vector<char> unlocked(g.size(), 0);
  for (int idx : problem.exit_nodes) {
    NodeIndex nd = g.node(idx);
    for (int d = 0; d < 4; ++d) {
      int ni = nd.i + di[d], nj = nd.j + dj[d];
      if (!g.contains(ni, nj)) continue;
      int nidx = g.index(ni, nj);
      if (!is_exit[nidx]) unlocked[nidx] = 1;
    }
  }

  long long sweep_number = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    SweepDir dir = sweep_direction(sweep_number);
    AxisOrder io = i_order(dir, g.m), jo = j_order(dir, g.n);
    for (int i = io.begin; i != io.end; i += io.step) {
      for (int j = jo.begin; j != jo.end; j += jo.step) {
        int idx = g.index(i, j);
        if (!unlocked[idx]) continue;
        unlocked[idx] = 0;  // locked again regardless of the outcome
        ++out.node_updates;
        double cand =
            node_update(gather_neighbors(v, i, j), problem.speed_at(i, j), g.h);
        if (cand < v[idx]) {
          v[idx] = cand;
          changed = true;
          for (int d = 0; d < 4; ++d) {
            int ni = i + di[d], nj = j + dj[d];
            if (!g.contains(ni, nj)) continue;
            int nidx = g.index(ni, nj);
            if (!is_exit[nidx] && v[nidx] > cand) unlocked[nidx] = 1;
          }
        }
      }
    }
    ++sweep_number;
  }
  out.sweeps = sweep_number;
  return out;
}

}  // namespace eikonal
