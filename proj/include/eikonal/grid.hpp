#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace eikonal {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Error class for invalid user-facing configuration (bad problem specs,
/// unknown names, malformed config files).  The CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct NodeIndex {
  int i = 0;
  int j = 0;
  friend bool operator==(NodeIndex a, NodeIndex b) {
    return a.i == b.i && a.j == b.j;
  }
};

/// Uniform Cartesian node lattice.  Node (i,j) sits at
/// (x0 + i*h, y0 + j*h) for 0 <= i < m, 0 <= j < n.
struct Grid {
  int m = 2;        // node count in x
  int n = 2;        // node count in y
  double h = 1.0;   // node spacing
  double x0 = 0.0;  // position of node (0,0)
  double y0 = 0.0;

  Grid() = default;
  Grid(int m_, int n_, double h_, double x0_ = 0.0, double y0_ = 0.0);

  /// Grid covering [0,1]^2 with m nodes per axis, h = 1/(m-1).
  static Grid unit_square(int m_per_axis);

  int size() const { return m * n; }
  int index(int i, int j) const { return j * m + i; }
  NodeIndex node(int linear) const { return {linear % m, linear / m}; }
  double x(int i) const { return x0 + i * h; }
  double y(int j) const { return y0 + j * h; }
  Point position(int i, int j) const { return {x(i), y(j)}; }
  bool contains(int i, int j) const {
    return i >= 0 && i < m && j >= 0 && j < n;
  }
};

/// Nearest grid node to p; ties broken toward smaller i, then smaller j.
/// Throws std::domain_error if p lies outside the grid bounding box.
NodeIndex snap_point_to_node(const Grid& grid, Point p);

using SpeedFn = std::function<double(double, double)>;

/// One Eikonal instance: grid + speed field + discretized exit set.
/// Point sources also keep their continuous position: coarse-scale
/// discretizations snap Q to their own lattice, not to the fine nodes.
struct Problem {
  Grid grid;
  SpeedFn speed;                 // F(x,y) > 0 on the closed domain
  std::vector<int> exit_nodes;   // linear indices, strictly ascending
  std::vector<double> exit_cost; // parallel to exit_nodes
  std::vector<Point> exit_points;       // pre-snap source positions
  std::vector<double> exit_point_cost;  // parallel to exit_points

  double speed_at(int i, int j) const {
    return speed(grid.x(i), grid.y(j));
  }
};

enum class ExitKind { Point, Boundary, Nodes };

/// Exit-set description used by build_problem.
struct ExitSpec {
  ExitKind kind = ExitKind::Point;
  Point point{0.5, 0.5};            // Point: snapped to the nearest node
  double point_cost = 0.0;
  std::vector<NodeIndex> nodes;     // Nodes: explicit list
  std::vector<double> node_costs;   // parallel to nodes (empty => all zero)

  static ExitSpec point_source(Point p, double q = 0.0) {
    ExitSpec s;
    s.kind = ExitKind::Point;
    s.point = p;
    s.point_cost = q;
    return s;
  }
  static ExitSpec full_boundary() {
    ExitSpec s;
    s.kind = ExitKind::Boundary;
    return s;
  }
};

/// Build a Problem on grid with the given speed field and exit set.
/// Point sources snap via snap_point_to_node; "boundary" marks every node
/// with i in {0,m-1} or j in {0,n-1} as an exit with q = 0.
/// Throws ConfigError if the resulting exit set is empty.
Problem build_problem(const Grid& grid, SpeedFn speed, const ExitSpec& exits);

/// m x n value array; +inf marks unreached nodes.
struct ValueField {
  int m = 0;
  int n = 0;
  std::vector<double> values;

  ValueField() = default;
  ValueField(int m_, int n_, double fill = kInf)
      : m(m_), n(n_), values(static_cast<size_t>(m_) * n_, fill) {}

  double& at(int i, int j) { return values[static_cast<size_t>(j) * m + i]; }
  double at(int i, int j) const {
    return values[static_cast<size_t>(j) * m + i];
  }
  double& operator[](int linear) { return values[linear]; }
  double operator[](int linear) const { return values[linear]; }
  int size() const { return m * n; }
};

/// Per-run statistics specific to the two-scale methods.
struct HybridStats {
  double avhr = 0.0;    // heap removals per cell
  double avs = 0.0;     // in-cell sweeps per cell
  double mon_pct = 0.0; // % of monotonicity checks returning one direction
  long long cell_removals = 0;
  long long cell_sweeps = 0;
  long long mon_checks = 0;
  long long mon_single = 0;
};

struct SolverOutput {
  ValueField values;
  long long sweeps = 0;        // grid sweeps (FSM/LSM), in-cell sweeps (hybrids)
  long long node_updates = 0;  // local-solver invocations
  long long heap_removals = 0; // node removals (FMM), cell removals (HCM/FHCM)
  HybridStats hybrid;
  std::vector<int> acceptance_order; // FMM only, when requested
};

}  // namespace eikonal
