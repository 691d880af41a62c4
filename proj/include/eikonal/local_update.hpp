#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>

#include "eikonal/grid.hpp"

namespace eikonal {

/// Values at the four neighbors of a node; +inf where a neighbor is
/// unreached or off the grid.
struct NeighborValues {
  double east = kInf;
  double west = kInf;
  double north = kInf;
  double south = kInf;
};

/// One of the four diagonal sweep directions.  A sweep *from* NE starts at
/// the northeast corner and uses the north/east neighbors in directional
/// updates.
enum class SweepDir : int { SW = 0, NW = 1, NE = 2, SE = 3 };

/// Solve the single-quadrant update: the root U >= max(u_a, u_b) of
///   (U - u_a)^2 + (U - u_b)^2 = (h/f)^2.
/// When no such root exists (|u_a - u_b| > h/f, or one input is infinite)
/// falls back to the smaller one-sided update h/f + min(u_a, u_b).
/// Returns +inf iff both inputs are +inf.
inline double quadrant_update(double u_a, double u_b, double f, double h) {
  assert(!std::isnan(u_a) && !std::isnan(u_b));
  assert(f > 0.0 && h > 0.0);
  const double c = h / f;
  if (std::isfinite(u_a) && std::isfinite(u_b)) {
    const double diff = u_a - u_b;
    // |u_a - u_b| <= c is equivalent to the root clearing max(u_a, u_b)
    // but is stable near the boundary case.
    if (std::abs(diff) <= c) {
      return 0.5 * (u_a + u_b) + 0.5 * std::sqrt(2.0 * c * c - diff * diff);
    }
  }
  return c + std::min(u_a, u_b);
}

/// Full four-quadrant node update.  By monotonicity the minimum over all
/// four quadrants equals the single update built from the smaller
/// horizontal and smaller vertical neighbor.
inline double node_update(const NeighborValues& nb, double f, double h) {
  return quadrant_update(std::min(nb.east, nb.west),
                         std::min(nb.north, nb.south), f, h);
}

/// Sweep-directional update: uses exactly the two neighbors named by the
/// sweep direction (from NE -> north and east), ignoring the other two.
inline double directional_update(const NeighborValues& nb, SweepDir dir,
                                 double f, double h) {
  switch (dir) {
    case SweepDir::NE: return quadrant_update(nb.east, nb.north, f, h);
    case SweepDir::NW: return quadrant_update(nb.west, nb.north, f, h);
    case SweepDir::SE: return quadrant_update(nb.east, nb.south, f, h);
    case SweepDir::SW: return quadrant_update(nb.west, nb.south, f, h);
  }
  return kInf;  // unreachable
}

/// Gather the four neighbor values of node (i,j); off-grid sides are +inf.
inline NeighborValues gather_neighbors(const ValueField& v, int i, int j) {
  NeighborValues nb;
  if (i + 1 < v.m) nb.east = v.at(i + 1, j);
  if (i - 1 >= 0) nb.west = v.at(i - 1, j);
  if (j + 1 < v.n) nb.north = v.at(i, j + 1);
  if (j - 1 >= 0) nb.south = v.at(i, j - 1);
  return nb;
}

}  // namespace eikonal
