#include <doctest.h>

#include <cmath>

#include "eikonal/classic_solvers.hpp"
#include "eikonal/heap_cell.hpp"
#include "eikonal/speed_fields.hpp"
#include "test_support.hpp"

using namespace eikonal;
using test_support::max_rel_diff;

namespace {

Problem center_point_problem(int m, const SpeedSpec& speed) {
  return build_problem(Grid::unit_square(m), speed.fn(),
                       ExitSpec::point_source({0.5, 0.5}));
}

}  // namespace

TEST_CASE("scan_cell_boundary add criterion and flags") {
  // Two cells side by side on a 4x2 grid; the west cell was just
  // processed and improved its border.
  Grid g(4, 2, 1.0);
  Problem p;
  p.grid = g;
  p.speed = [](double, double) { return 1.0; };
  p.exit_nodes = {g.index(0, 0)};
  p.exit_cost = {0.0};
  CellDecomposition cells = build_cells(g, 2, 1);

  ValueField v(4, 2, kInf);
  v.at(0, 0) = 0.0;
  v.at(1, 0) = 1.0;  // east border of cell 0, changed from +inf
  v.at(1, 1) = 2.0;

  std::vector<double> before = {kInf, kInf};
  SUBCASE("improved border with smaller facing values adds the neighbor") {
    BorderScanResult r = scan_cell_boundary(p, cells, 0, Side::East, v,
                                            before, true, false);
    CHECK(r.should_add);
    REQUIRE(r.flags.size() == 2);  // HCM raises both inflow directions
    CHECK(((r.flags[0] == SweepDir::NW && r.flags[1] == SweepDir::SW) ||
           (r.flags[0] == SweepDir::SW && r.flags[1] == SweepDir::NW)));
    CHECK(std::isfinite(r.cell_value_cand));
  }

  SUBCASE("no change and no first-removal exit gives no add") {
    std::vector<double> unchanged = {1.0, 2.0};
    BorderScanResult r = scan_cell_boundary(p, cells, 0, Side::East, v,
                                            unchanged, false, false);
    CHECK_FALSE(r.should_add);
    CHECK(r.flags.empty());
    CHECK(std::isfinite(r.cell_value_cand));  // candidate still computed
  }

  SUBCASE("strictly larger facing values block the add") {
    ValueField w = v;
    w.at(2, 0) = 0.5;  // west column of the east cell already smaller
    w.at(2, 1) = 0.5;
    BorderScanResult r = scan_cell_boundary(p, cells, 0, Side::East, w,
                                            before, true, false);
    CHECK_FALSE(r.should_add);
    CHECK(std::isfinite(r.cell_value_cand));
  }

  SUBCASE("monotonicity narrows the raised flags") {
    // border values north-to-south: 2.0, 1.0 -> non-increasing -> SW only
    BorderScanResult r = scan_cell_boundary(p, cells, 0, Side::East, v,
                                            before, true, true);
    CHECK(r.should_add);
    CHECK(r.mon_checked);
    CHECK(r.mon_single);
    REQUIRE(r.flags.size() == 1);
    CHECK(r.flags[0] == SweepDir::SW);
  }
}

TEST_CASE("hcm with a single cell behaves exactly like lsm") {
  Problem p = center_point_problem(33, speed_checkerboard(11));
  CellDecomposition cells = build_cells(p.grid, 1, 1);
  SolverOutput hcm = hcm_solve(p, cells);
  SolverOutput lsm = lsm_solve(p);
  CHECK(hcm.heap_removals == 1);
  CHECK(hcm.hybrid.avhr == 1.0);
  CHECK(hcm.sweeps == lsm.sweeps);
  CHECK(hcm.node_updates == lsm.node_updates);
  CHECK(max_rel_diff(hcm.values, lsm.values) == 0.0);
}

TEST_CASE("hcm matches fmm on a problem/cell matrix") {
  for (const char* name : {"constant", "checker11", "sinusoidB", "comb4"}) {
    NamedProblem np = named_problem(name);
    Problem p = build_problem(Grid::unit_square(44), np.speed.fn(),
                              ExitSpec::point_source(np.default_source));
    ValueField exact = fmm_solve(p).values;
    for (int c : {2, 4, 11}) {
      CellDecomposition cells = build_cells(p.grid, c, c);
      SolverOutput hcm = hcm_solve(p, cells);
      CAPTURE(name);
      CAPTURE(c);
      CHECK(max_rel_diff(hcm.values, exact) < 1e-9);
    }
  }
}

TEST_CASE("hcm stays exact on remainder decompositions") {
  // 45 nodes into 7 cells: six cells of 6 nodes, the last one 9 wide.
  Problem p = center_point_problem(45, speed_sinusoid(0.99, 2));
  ValueField exact = fmm_solve(p).values;
  SolverOutput hcm = hcm_solve(p, build_cells(p.grid, 7, 7));
  CHECK(max_rel_diff(hcm.values, exact) < 1e-9);
}

TEST_CASE("hcm with boundary exit sets still matches fmm") {
  Problem p = build_problem(Grid::unit_square(45), speed_sinusoid(0.5, 20).fn(),
                            ExitSpec::full_boundary());
  ValueField exact = fmm_solve(p).values;
  SolverOutput hcm = hcm_solve(p, build_cells(p.grid, 5, 5));
  CHECK(max_rel_diff(hcm.values, exact) < 1e-9);
}

TEST_CASE("fhcm values bound fmm values from above") {
  for (const char* name : {"checker11", "sinusoidA", "comb4"}) {
    NamedProblem np = named_problem(name);
    Problem p = build_problem(Grid::unit_square(44), np.speed.fn(),
                              ExitSpec::point_source(np.default_source));
    ValueField exact = fmm_solve(p).values;
    for (int c : {4, 11}) {
      SolverOutput fhcm = fhcm_solve(p, build_cells(p.grid, c, c));
      for (int k = 0; k < exact.size(); ++k) {
        CAPTURE(name);
        CAPTURE(c);
        CAPTURE(k);
        REQUIRE(fhcm.values[k] >= exact[k] - 1e-12);
      }
    }
  }
}

TEST_CASE("fhcm is exact for constant speed") {
  Problem p = center_point_problem(56, speed_constant());
  ValueField exact = fmm_solve(p).values;
  for (int c : {4, 8}) {
    SolverOutput fhcm = fhcm_solve(p, build_cells(p.grid, c, c));
    CHECK(max_rel_diff(fhcm.values, exact) < 1e-13);
    CHECK(fhcm.hybrid.mon_pct == 100.0);
    CHECK(fhcm.hybrid.avhr == 1.0);
  }
}

TEST_CASE("all-exit problem leaves the cell solvers idle") {
  ExitSpec exits;
  exits.kind = ExitKind::Nodes;
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i) exits.nodes.push_back({i, j});
  Problem p = build_problem(Grid::unit_square(8), speed_constant().fn(), exits);
  CellDecomposition cells = build_cells(p.grid, 2, 2);
  SolverOutput hcm = hcm_solve(p, cells);
  CHECK(hcm.node_updates == 0);
  for (int k = 0; k < p.grid.size(); ++k) CHECK(hcm.values[k] == 0.0);
}

TEST_CASE("first-removal exit borders still influence neighbors") {
  // A cell consisting entirely of exit nodes changes no value when
  // processed; its neighbors must be added through the first-removal
  // clause of the add criterion or they would stay at infinity.
  Grid g = Grid::unit_square(8);
  ExitSpec exits;
  exits.kind = ExitKind::Nodes;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) exits.nodes.push_back({i, j});
  Problem p = build_problem(g, speed_constant().fn(), exits);
  CellDecomposition cells = build_cells(g, 2, 2);  // cell (0,0) == Q

  ValueField exact = fmm_solve(p).values;
  SolverOutput hcm = hcm_solve(p, cells);
  SolverOutput fhcm = fhcm_solve(p, cells);
  for (int k = 0; k < g.size(); ++k) {
    REQUIRE(std::isfinite(hcm.values[k]));
    REQUIRE(std::isfinite(fhcm.values[k]));
  }
  CHECK(max_rel_diff(hcm.values, exact) < 1e-12);
}

TEST_CASE("counters are deterministic across repeated runs") {
  Problem p = center_point_problem(33, speed_sinusoid(0.99, 2));
  CellDecomposition cells = build_cells(p.grid, 4, 4);
  SolverOutput a = fhcm_solve(p, cells);
  SolverOutput b = fhcm_solve(p, cells);
  CHECK(a.heap_removals == b.heap_removals);
  CHECK(a.sweeps == b.sweeps);
  CHECK(a.node_updates == b.node_updates);
  CHECK(a.hybrid.mon_checks == b.hybrid.mon_checks);
  CHECK(max_rel_diff(a.values, b.values) == 0.0);
}

TEST_CASE("cell values never increase during a run") {
  // Indirect check: HCM must equal FMM (theorem) even on a decomposition
  // whose cells are revisited; budget guard would throw on livelock.
  Problem p = center_point_problem(33, speed_comb_maze(2));
  SolverOutput hcm = hcm_solve(p, build_cells(p.grid, 3, 3));
  CHECK(max_rel_diff(hcm.values, fmm_solve(p).values) < 1e-9);
}
