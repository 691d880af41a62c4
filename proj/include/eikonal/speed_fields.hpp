#pragma once

#include <string>
#include <vector>

#include "eikonal/grid.hpp"

namespace eikonal {

enum class SpeedKind { Constant, Checkerboard, Sinusoid, CombMaze };

/// Pure, positive speed field on the closed unit square.
struct SpeedSpec {
  SpeedKind kind = SpeedKind::Constant;

  // checkerboard
  int checkers = 11;
  double slow = 1.0;
  double fast = 2.0;

  // sinusoid: F = 1 + amplitude * sin(freq*pi*x) * sin(freq*pi*y)
  double amplitude = 0.0;
  int freq = 0;

  // comb maze
  int n_barriers = 4;
  double barrier_speed = 0.01;
  double barrier_width = 1.0 / 11.0;
  double gap_fraction = 1.0 / 11.0;

  double operator()(double x, double y) const;
  SpeedFn fn() const {
    SpeedSpec copy = *this;
    return [copy](double x, double y) { return copy(x, y); };
  }
};

SpeedSpec speed_constant();

/// k x k checkerboard, k odd; F = slow where the checker index sum is even
/// (the center checker), fast otherwise.
SpeedSpec speed_checkerboard(int k, double slow = 1.0, double fast = 2.0);

/// F = 1 + amplitude * sin(freq*pi*x) * sin(freq*pi*y), |amplitude| < 1.
SpeedSpec speed_sinusoid(double amplitude, int freq);

/// Vertical barriers at x = i/(n+1) of width w with an alternating gap of
/// height g (odd barriers open at the top).  F = barrier_speed inside.
SpeedSpec speed_comb_maze(int n_barriers, double barrier_speed = 0.01,
                          double barrier_width = 1.0 / 11.0,
                          double gap_fraction = 1.0 / 11.0);

/// One of the named benchmark problems, with its default point source.
struct NamedProblem {
  std::string name;
  SpeedSpec speed;
  Point default_source;
};

/// Look up constant | checker11 | checker41 | sinusoidA | sinusoidB |
/// comb4 | comb8.  Throws ConfigError naming the token otherwise.
NamedProblem named_problem(const std::string& name);

const std::vector<std::string>& problem_names();

}  // namespace eikonal
