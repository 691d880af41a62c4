#pragma once

#include <vector>

#include "eikonal/cells.hpp"
#include "eikonal/grid.hpp"

namespace eikonal {

/// Coarse companion of a fine problem: one node per cell at the cell
/// center, spacing h_c, exits in the cells intersecting Q.  Coarse node
/// linear indices coincide with cell indices.
struct CoarseProblem {
  Problem problem;  // grid is cells_x x cells_y with spacing h_c
};

/// Coarse costs: 0 for a single-node exit set, otherwise a one-sided
/// estimate q + dist(center, nearest exit node in the cell) / F(center).
CoarseProblem build_coarse_problem(const Problem& problem,
                                   const CellDecomposition& cells);

/// Sweep directions for a cell given which of its neighbors were accepted
/// earlier on the coarse grid, following the coarse-sweep-choice rule: the
/// inflow sign per axis is fixed when exactly one of the two opposing
/// sides is accepted, left open otherwise, and the set is the product of
/// the per-axis options.
std::vector<SweepDir> fmsm_sweep_directions(bool west_accepted,
                                            bool east_accepted,
                                            bool south_accepted,
                                            bool north_accepted);

/// Fast Marching-Sweeping: coarse FMM fixes a one-pass cell order and the
/// per-cell sweep directions; cells are then swept once per direction with
/// sweep-directional updates (exit cells: full FSM to convergence).
/// Requires cells_x >= 2 and cells_y >= 2.
SolverOutput fmsm_solve(const Problem& problem,
                        const CellDecomposition& cells);

}  // namespace eikonal
