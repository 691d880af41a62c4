#include <doctest.h>

#include <random>

#include "eikonal/grid.hpp"
#include "eikonal/speed_fields.hpp"

using namespace eikonal;

TEST_CASE("snap_point_to_node pinned examples") {
  Grid g3 = Grid::unit_square(3);
  CHECK(snap_point_to_node(g3, {0.5, 0.5}) == NodeIndex{1, 1});

  Grid g2 = Grid::unit_square(2);
  CHECK(snap_point_to_node(g2, {0.49, 0.49}) == NodeIndex{0, 0});
  // Exact tie goes to the smaller index.
  CHECK(snap_point_to_node(g2, {0.5, 0.5}) == NodeIndex{0, 0});
}

TEST_CASE("snap rejects points outside the bounding box") {
  Grid g = Grid::unit_square(4);
  CHECK_THROWS_AS(snap_point_to_node(g, {1.5, 0.5}), std::domain_error);
  CHECK_THROWS_AS(snap_point_to_node(g, {0.5, -0.2}), std::domain_error);
}

TEST_CASE("node coordinates round-trip through snapping") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> size(2, 40);
  for (int t = 0; t < 200; ++t) {
    Grid g = Grid::unit_square(size(rng));
    std::uniform_int_distribution<int> pick(0, g.m - 1);
    int i = pick(rng), j = pick(rng);
    CHECK(snap_point_to_node(g, g.position(i, j)) == NodeIndex{i, j});
  }
}

TEST_CASE("build_problem point source and boundary exits") {
  Grid g = Grid::unit_square(176);

  Problem point = build_problem(g, speed_constant().fn(),
                                ExitSpec::point_source({0.5, 0.5}));
  CHECK(point.exit_nodes.size() == 1);
  CHECK(point.exit_cost[0] == 0.0);

  Problem boundary =
      build_problem(g, speed_sinusoid(0.99, 2).fn(), ExitSpec::full_boundary());
  CHECK(boundary.exit_nodes.size() == 2 * 176 + 2 * 174);
}

TEST_CASE("build_problem rejects an empty exit set") {
  Grid g = Grid::unit_square(8);
  ExitSpec none;
  none.kind = ExitKind::Nodes;
  CHECK_THROWS_AS(build_problem(g, speed_constant().fn(), none), ConfigError);
}

TEST_CASE("problem construction is deterministic") {
  Grid g = Grid::unit_square(33);
  auto make = [&] {
    return build_problem(g, speed_checkerboard(11).fn(),
                         ExitSpec::point_source({0.5, 0.5}));
  };
  Problem a = make(), b = make();
  CHECK(a.exit_nodes == b.exit_nodes);
  CHECK(a.exit_cost == b.exit_cost);
}

TEST_CASE("checkerboard problem speed is evaluable on the grid") {
  Grid g = Grid::unit_square(176);
  Problem p = build_problem(g, speed_checkerboard(11).fn(),
                            ExitSpec::point_source({0.5, 0.5}));
  CHECK(p.speed_at(0, 0) == 1.0);
  CHECK(p.speed(0.5, 0.5) == 1.0);
}
