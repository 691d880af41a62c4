#include <doctest.h>

#include <algorithm>

#include "eikonal/cells.hpp"

using namespace eikonal;

TEST_CASE("even decomposition: 176 nodes into 22 cells of 8") {
  CellDecomposition d = build_cells(Grid::unit_square(176), 22, 22);
  CHECK(d.cell_count() == 484);
  for (int c = 0; c < 22; ++c) {
    CHECK(d.i_end[c] - d.i_begin[c] == 8);
    CHECK(d.j_end[c] - d.j_begin[c] == 8);
  }
  CHECK(d.hc_x == doctest::Approx(8.0 / 175.0));
}

TEST_CASE("1x1 decomposition holds every node and has no neighbors") {
  CellDecomposition d = build_cells(Grid::unit_square(9), 1, 1);
  CHECK(d.cell_count() == 1);
  CHECK(d.i_begin[0] == 0);
  CHECK(d.i_end[0] == 9);
  CHECK(d.neighbors(0).empty());
}

TEST_CASE("remainder goes to the last cell") {
  CellDecomposition d = build_cells(Grid::unit_square(9), 2, 2);
  CHECK(d.i_end[0] - d.i_begin[0] == 4);
  CHECK(d.i_end[1] - d.i_begin[1] == 5);
  CHECK(d.j_end[1] - d.j_begin[1] == 5);
}

TEST_CASE("cells partition the grid") {
  CellDecomposition d = build_cells(Grid::unit_square(29), 5, 3);
  std::vector<int> owners(29 * 29, -1);
  for (int j = 0; j < 29; ++j)
    for (int i = 0; i < 29; ++i) {
      int cell = d.cell_of_node(i, j);
      CHECK(cell >= 0);
      CHECK(cell < d.cell_count());
      CHECK(i >= d.i_begin[d.cx_of(cell)]);
      CHECK(i < d.i_end[d.cx_of(cell)]);
      CHECK(j >= d.j_begin[d.cy_of(cell)]);
      CHECK(j < d.j_end[d.cy_of(cell)]);
      owners[j * 29 + i] = cell;
    }
  CHECK(std::count(owners.begin(), owners.end(), -1) == 0);
}

TEST_CASE("neighbor lists are symmetric") {
  CellDecomposition d = build_cells(Grid::unit_square(40), 6, 4);
  for (int c = 0; c < d.cell_count(); ++c)
    for (int nb : d.neighbors(c)) {
      auto back = d.neighbors(nb);
      CHECK(std::find(back.begin(), back.end(), c) != back.end());
    }
}

TEST_CASE("zero cell counts are rejected") {
  CHECK_THROWS_AS(build_cells(Grid::unit_square(8), 0, 2), ConfigError);
  CHECK_THROWS_AS(build_cells(Grid::unit_square(8), 2, 9), ConfigError);
}

TEST_CASE("cell_value_candidate pinned examples") {
  CHECK(cell_value_candidate(1.0, 1.0, 0.01, 0.1) ==
        doctest::Approx(1.055).epsilon(1e-12));
  CHECK(cell_value_candidate(0.0, 2.0, 0.1, 0.1) ==
        doctest::Approx(0.05).epsilon(1e-12));
  CHECK(cell_value_candidate(kInf, 1.0, 0.1, 0.1) == kInf);
}

TEST_CASE("monotonicity_flags narrows to one direction when monotone") {
  // c_l west of c_k, sequence north-to-south
  auto up = monotonicity_flags({1.0, 2.0, 3.0}, Side::West);
  REQUIRE(up.size() == 1);
  CHECK(up[0] == SweepDir::NW);

  auto down = monotonicity_flags({3.0, 2.0, 1.0}, Side::West);
  REQUIRE(down.size() == 1);
  CHECK(down[0] == SweepDir::SW);

  auto mixed = monotonicity_flags({3.0, 1.0, 2.0}, Side::West);
  CHECK(mixed.size() == 2);

  // Constant sequences conservatively keep both directions.
  auto flat = monotonicity_flags({5.0, 5.0, 5.0}, Side::West);
  CHECK(flat.size() == 2);
}

TEST_CASE("monotonicity_flags covers all four orientations") {
  auto e = monotonicity_flags({1.0, 2.0}, Side::East);
  REQUIRE(e.size() == 1);
  CHECK(e[0] == SweepDir::NE);
  auto s = monotonicity_flags({1.0, 2.0}, Side::South);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == SweepDir::SW);
  auto n = monotonicity_flags({2.0, 1.0}, Side::North);
  REQUIRE(n.size() == 1);
  CHECK(n[0] == SweepDir::NE);
}
