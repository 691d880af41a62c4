#pragma once

#include <array>
#include <vector>

#include "eikonal/grid.hpp"
#include "eikonal/local_update.hpp"

namespace eikonal {

/// Side of a cell, also the direction from a cell to that neighbor.
enum class Side : int { West = 0, East = 1, South = 2, North = 3 };

inline Side opposite(Side s) {
  switch (s) {
    case Side::West: return Side::East;
    case Side::East: return Side::West;
    case Side::South: return Side::North;
    case Side::North: return Side::South;
  }
  return Side::West;
}

/// Partition of a grid into cells_x x cells_y rectangular blocks of nodes.
/// Blocks are equal-sized when the node count divides evenly; otherwise the
/// remainder goes to the last row/column of cells.
struct CellDecomposition {
  Grid grid;
  int cells_x = 1;
  int cells_y = 1;
  double hc_x = 0.0;  // center-to-center cell spacing, x
  double hc_y = 0.0;
  std::vector<int> i_begin, i_end;  // node range [i_begin[cx], i_end[cx])
  std::vector<int> j_begin, j_end;

  int cell_count() const { return cells_x * cells_y; }
  int cell_index(int cx, int cy) const { return cy * cells_x + cx; }
  int cx_of(int cell) const { return cell % cells_x; }
  int cy_of(int cell) const { return cell / cells_x; }

  int cell_of_node(int i, int j) const;

  /// Geometric center of the cell's node bounding box.
  Point center(int cell) const {
    int cx = cx_of(cell), cy = cy_of(cell);
    return {0.5 * (grid.x(i_begin[cx]) + grid.x(i_end[cx] - 1)),
            0.5 * (grid.y(j_begin[cy]) + grid.y(j_end[cy] - 1))};
  }

  /// Neighbor cell across the given side, or -1 at the domain edge.
  int neighbor(int cell, Side s) const {
    int cx = cx_of(cell), cy = cy_of(cell);
    switch (s) {
      case Side::West: return cx > 0 ? cell_index(cx - 1, cy) : -1;
      case Side::East: return cx + 1 < cells_x ? cell_index(cx + 1, cy) : -1;
      case Side::South: return cy > 0 ? cell_index(cx, cy - 1) : -1;
      case Side::North: return cy + 1 < cells_y ? cell_index(cx, cy + 1) : -1;
    }
    return -1;
  }

  std::vector<int> neighbors(int cell) const {
    std::vector<int> out;
    for (Side s : {Side::West, Side::East, Side::South, Side::North}) {
      int nb = neighbor(cell, s);
      if (nb >= 0) out.push_back(nb);
    }
    return out;
  }

  /// Center-to-center spacing along the axis of the given side.
  double hc_along(Side s) const {
    return (s == Side::West || s == Side::East) ? hc_x : hc_y;
  }
};

/// Throws ConfigError unless 1 <= cells_x <= m and 1 <= cells_y <= n.
CellDecomposition build_cells(const Grid& grid, int cells_x, int cells_y);

/// Node-index rectangle [ib,ie) x [jb,je) of one cell.
struct CellRect {
  int ib, ie, jb, je;
  bool contains(int i, int j) const {
    return i >= ib && i < ie && j >= jb && j < je;
  }
};

inline CellRect cell_rect(const CellDecomposition& d, int cell) {
  const int cx = d.cx_of(cell), cy = d.cy_of(cell);
  return {d.i_begin[cx], d.i_end[cx], d.j_begin[cy], d.j_end[cy]};
}

/// Half-open traversal of one axis of a rect in sweep order.
struct AxisOrder {
  int begin, end, step;
};

inline AxisOrder sweep_i_order(SweepDir dir, const CellRect& r) {
  bool asc = (dir == SweepDir::SW || dir == SweepDir::NW);
  return asc ? AxisOrder{r.ib, r.ie, 1} : AxisOrder{r.ie - 1, r.ib - 1, -1};
}

inline AxisOrder sweep_j_order(SweepDir dir, const CellRect& r) {
  bool asc = (dir == SweepDir::SW || dir == SweepDir::SE);
  return asc ? AxisOrder{r.jb, r.je, 1} : AxisOrder{r.je - 1, r.jb - 1, -1};
}

/// Cell-value candidate from a boundary value: v + ((h + h_c)/2) / f.
inline double cell_value_candidate(double v_boundary, double f_probe, double h,
                                   double h_c) {
  return v_boundary + 0.5 * (h + h_c) / f_probe;
}

/// FHCM monotonicity check.  `values` runs north-to-south for a vertical
/// border and west-to-east for a horizontal one; `from_side` is the side of
/// the target cell the influence enters through.  Returns the narrowed flag
/// set: one direction when the sequence is monotone one way only, both
/// directions otherwise (including the constant sequence).
std::array<SweepDir, 2> monotonicity_sides(Side from_side);
std::vector<SweepDir> monotonicity_flags(const std::vector<double>& values,
                                         Side from_side);

}  // namespace eikonal
