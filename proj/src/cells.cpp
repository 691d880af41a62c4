#include "eikonal/cells.hpp"

namespace eikonal {

namespace {

void split_axis(int nodes, int cells, std::vector<int>& begin,
                std::vector<int>& end) {
  const int base = nodes / cells;
  begin.resize(cells);
  end.resize(cells);
  int at = 0;
  for (int c = 0; c < cells; ++c) {
    begin[c] = at;
    at += base;
    if (c == cells - 1) at = nodes;  // remainder goes to the last cell
    end[c] = at;
  }
}

}  // namespace

int CellDecomposition::cell_of_node(int i, int j) const {
  auto locate = [](const std::vector<int>& end, int k) {
    int c = 0;
    while (end[c] <= k) ++c;
    return c;
  };
  return cell_index(locate(i_end, i), locate(j_end, j));
}

CellDecomposition build_cells(const Grid& grid, int cells_x, int cells_y) {
  if (cells_x < 1 || cells_y < 1)
    throw ConfigError("cell counts must be positive");
  if (cells_x > grid.m || cells_y > grid.n)
    throw ConfigError("more cells than grid nodes along an axis");

  CellDecomposition d;
  d.grid = grid;
  d.cells_x = cells_x;
  d.cells_y = cells_y;
  split_axis(grid.m, cells_x, d.i_begin, d.i_end);
  split_axis(grid.n, cells_y, d.j_begin, d.j_end);
  d.hc_x = (grid.m / cells_x) * grid.h;
  d.hc_y = (grid.n / cells_y) * grid.h;
  return d;
}

std::array<SweepDir, 2> monotonicity_sides(Side from_side) {
  // {direction when non-decreasing, direction when non-increasing} with
  // the sequence ordered north-to-south (vertical) or west-to-east
  // (horizontal).
  switch (from_side) {
    case Side::West: return {SweepDir::NW, SweepDir::SW};
    case Side::East: return {SweepDir::NE, SweepDir::SE};
    case Side::South: return {SweepDir::SW, SweepDir::SE};
    case Side::North: return {SweepDir::NW, SweepDir::NE};
  }
  return {SweepDir::NW, SweepDir::SW};
}

std::vector<SweepDir> monotonicity_flags(const std::vector<double>& values,
                                         Side from_side) {
  bool non_decreasing = true;
  bool non_increasing = true;
  for (size_t k = 1; k < values.size(); ++k) {
    if (values[k] < values[k - 1]) non_decreasing = false;
    if (values[k] > values[k - 1]) non_increasing = false;
  }
  auto [dir_up, dir_down] = monotonicity_sides(from_side);
  if (non_decreasing && !non_increasing) return {dir_up};
  if (non_increasing && !non_decreasing) return {dir_down};
  return {dir_up, dir_down};  // non-monotone or constant
}

}  // namespace eikonal
