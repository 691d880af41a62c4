#pragma once

#include <vector>

#include "eikonal/cells.hpp"
#include "eikonal/grid.hpp"
#include "eikonal/local_update.hpp"

namespace eikonal {

/// Outcome of scanning one border of a just-processed cell toward a
/// neighbor: the Algorithm-6 add criterion, the directional flags to raise
/// in the neighbor, and the neighbor's new cell-value candidate.
struct BorderScanResult {
  bool should_add = false;
  std::vector<SweepDir> flags;   // empty unless should_add
  double cell_value_cand = kInf; // always computed
  bool mon_checked = false;
  bool mon_single = false;
};

/// Scan the border of `cell` toward its neighbor across `side`.
/// `before` holds the strip values snapshotted before processing, ordered
/// by ascending node coordinate along the strip.  With `use_monotonicity`
/// the raised flags are narrowed by the border monotonicity check (FHCM);
/// otherwise both inflow directions are raised (HCM).
BorderScanResult scan_cell_boundary(const Problem& problem,
                                    const CellDecomposition& cells, int cell,
                                    Side side, const ValueField& v,
                                    const std::vector<double>& before,
                                    bool first_removal, bool use_monotonicity);

/// Heap-Cell Method: label-correcting on cells with a min-heap keyed by
/// cell values; each removed cell is locking-swept to convergence with the
/// flagged directions tried first.  Converges to the exact solution.
SolverOutput hcm_solve(const Problem& problem, const CellDecomposition& cells);

/// Fast Heap-Cell Method: one sweep per raised directional flag per
/// removal, flags narrowed by border monotonicity checks.  Values satisfy
/// V >= exact pointwise.
SolverOutput fhcm_solve(const Problem& problem,
                        const CellDecomposition& cells);

}  // namespace eikonal
