#pragma once

#include <algorithm>
#include <cmath>

#include "eikonal/grid.hpp"
#include "eikonal/local_update.hpp"

namespace test_support {

// Independent oracle: plain Gauss-Seidel over all nodes in a fixed linear
// order, iterated to the floating-point fixed point.  No sweep rotation,
// no locking, no heap -- shares only the local update formula.
inline eikonal::ValueField brute_force_fixed_point(
    const eikonal::Problem& p) {
  using namespace eikonal;
  const Grid& g = p.grid;
  ValueField v(g.m, g.n, kInf);
  std::vector<char> is_exit(g.size(), 0);
  for (size_t k = 0; k < p.exit_nodes.size(); ++k) {
    v[p.exit_nodes[k]] = p.exit_cost[k];
    is_exit[p.exit_nodes[k]] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < g.n; ++j)
      for (int i = 0; i < g.m; ++i) {
        int idx = g.index(i, j);
        if (is_exit[idx]) continue;
        double cand =
            node_update(gather_neighbors(v, i, j), p.speed_at(i, j), g.h);
        if (cand < v[idx]) {
          v[idx] = cand;
          changed = true;
        }
      }
  }
  return v;
}

// max_i |a_i - b_i| / max(|a_i|, |b_i|), with 0/0 treated as equal
inline double max_rel_diff(const eikonal::ValueField& a,
                           const eikonal::ValueField& b) {
  double worst = 0.0;
  for (int k = 0; k < a.size(); ++k) {
    double denom = std::max(std::abs(a[k]), std::abs(b[k]));
    if (denom == 0.0) continue;
    if (std::isinf(a[k]) && std::isinf(b[k])) continue;
    worst = std::max(worst, std::abs(a[k] - b[k]) / denom);
  }
  return worst;
}

}  // namespace test_support
