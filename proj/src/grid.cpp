#include "eikonal/grid.hpp"

#include <algorithm>
#include <cmath>

namespace eikonal {

Grid::Grid(int m_, int n_, double h_, double x0_, double y0_)
    : m(m_), n(n_), h(h_), x0(x0_), y0(y0_) {
  if (m < 2 || n < 2) throw ConfigError("grid needs at least 2 nodes per axis");
  if (!(h > 0.0)) throw ConfigError("grid spacing must be positive");
}

Grid Grid::unit_square(int m_per_axis) {
  if (m_per_axis < 2) throw ConfigError("grid needs at least 2 nodes per axis");
  return Grid(m_per_axis, m_per_axis, 1.0 / (m_per_axis - 1));
}

namespace {

// Nearest index along one axis with the tie going to the smaller index.
int snap_axis(double t, int count) {
  int lo = static_cast<int>(std::floor(t));
  lo = std::clamp(lo, 0, count - 1);
  int hi = std::min(lo + 1, count - 1);
  // t - lo == 0.5 resolves to lo.
  int idx = (t - lo > 0.5) ? hi : lo;
  return std::clamp(idx, 0, count - 1);
}

}  // namespace

NodeIndex snap_point_to_node(const Grid& grid, Point p) {
  const double eps = 1e-12 * grid.h;
  if (p.x < grid.x0 - eps || p.x > grid.x(grid.m - 1) + eps ||
      p.y < grid.y0 - eps || p.y > grid.y(grid.n - 1) + eps) {
    throw std::domain_error("point outside grid bounding box");
  }
  return {snap_axis((p.x - grid.x0) / grid.h, grid.m),
          snap_axis((p.y - grid.y0) / grid.h, grid.n)};
}

Problem build_problem(const Grid& grid, SpeedFn speed, const ExitSpec& exits) {
  Problem p;
  p.grid = grid;
  p.speed = std::move(speed);

  std::vector<std::pair<int, double>> marked;
  switch (exits.kind) {
    case ExitKind::Point: {
      NodeIndex s = snap_point_to_node(grid, exits.point);
      marked.emplace_back(grid.index(s.i, s.j), exits.point_cost);
      p.exit_points.push_back(exits.point);
      p.exit_point_cost.push_back(exits.point_cost);
      break;
    }
    case ExitKind::Boundary: {
      for (int j = 0; j < grid.n; ++j)
        for (int i = 0; i < grid.m; ++i)
          if (i == 0 || i == grid.m - 1 || j == 0 || j == grid.n - 1)
            marked.emplace_back(grid.index(i, j), 0.0);
      break;
    }
    case ExitKind::Nodes: {
      for (size_t k = 0; k < exits.nodes.size(); ++k) {
        const NodeIndex& nd = exits.nodes[k];
        if (!grid.contains(nd.i, nd.j))
          throw ConfigError("exit node outside grid");
        double q = exits.node_costs.empty() ? 0.0 : exits.node_costs[k];
        if (!std::isfinite(q)) throw ConfigError("exit cost must be finite");
        marked.emplace_back(grid.index(nd.i, nd.j), q);
      }
      break;
    }
  }

  if (marked.empty()) throw ConfigError("exit set is empty");

  std::sort(marked.begin(), marked.end());
  // Duplicate nodes keep the smaller cost.
  for (const auto& [idx, q] : marked) {
    if (!p.exit_nodes.empty() && p.exit_nodes.back() == idx) {
      p.exit_cost.back() = std::min(p.exit_cost.back(), q);
    } else {
      p.exit_nodes.push_back(idx);
      p.exit_cost.push_back(q);
    }
  }
  return p;
}

}  // namespace eikonal
