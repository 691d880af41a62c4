#pragma once

#include <utility>
#include <vector>

#include "eikonal/grid.hpp"
#include "eikonal/local_update.hpp"

namespace eikonal {

struct FmmOptions {
  bool record_acceptance_order = false;
};

/// Fast Marching: label-setting solve of the upwind discretization.
/// Values are exact (to floating point); the acceptance-order value
/// sequence is non-decreasing.
SolverOutput fmm_solve(const Problem& problem, const FmmOptions& opts = {});

/// Sweep ordering for sweep number k (mod 4):
///   0 -> from SW (i ascending,  j ascending)
///   1 -> from NW (i ascending,  j descending)
///   2 -> from NE (i descending, j descending)
///   3 -> from SE (i descending, j ascending)
SweepDir sweep_direction(long long sweep_number);

/// Index orders for one sweep, in paper form (outer i, inner j).
std::pair<std::vector<int>, std::vector<int>> sweep_order(
    long long sweep_number, int m, int n);

/// Fast Sweeping: Gauss-Seidel in rotating diagonal orders until a full
/// sweep changes nothing.  The final no-change sweep is counted.
SolverOutput fsm_solve(const Problem& problem);

/// Locking Sweeping: FSM with per-node locking flags.  Same values and
/// sweep count as fsm_solve with strictly fewer node updates on
/// non-trivial problems.
SolverOutput lsm_solve(const Problem& problem);

}  // namespace eikonal
